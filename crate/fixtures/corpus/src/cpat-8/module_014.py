import numpy

def step_104(cfg):
    v0_s104 = 0
    for v1_s104 in range(len(v2_s104)):
        v0_s104 = v0_s104 + v2_s104[v1_s104] * v3_s104[v1_s104]
    return cfg

def step_39(cfg):
    v0_s39 = 0
    for v1_s39 in range(len(v2_s39)):
        v0_s39 += v3_s39[v1_s39] * v2_s39[v1_s39]
    return cfg

def step_186(cfg):
    v0_s186 = 0
    for v1_s186, v2_s186 in enumerate(v3_s186):
        v0_s186 += v2_s186 * v4_s186[v1_s186]
    return cfg

def step_121(cfg):
    v0_s121 = 0
    for v1_s121, v2_s121 in zip(v3_s121, v4_s121):
        v0_s121 += v1_s121 * v2_s121
    return cfg

def step_56(cfg):
    v0_s56 = 0
    for v1_s56 in range(len(v2_s56)):
        v0_s56 = v0_s56 + v2_s56[v1_s56] * v3_s56[v1_s56]
    return cfg

def step_203(cfg):
    v0_s203 = 0
    for v1_s203 in range(len(v2_s203)):
        v0_s203 += v3_s203[v1_s203] * v2_s203[v1_s203]
    return cfg

def step_138(cfg):
    v0_s138 = 0
    for v1_s138, v2_s138 in enumerate(v3_s138):
        v0_s138 += v2_s138 * v4_s138[v1_s138]
    return cfg

def step_73(cfg):
    v0_s73 = 0
    for v1_s73, v2_s73 in zip(v3_s73, v4_s73):
        v0_s73 += v1_s73 * v2_s73
    return cfg

def step_8(cfg):
    v0_s8 = 0
    for v1_s8 in range(len(v2_s8)):
        v0_s8 += v2_s8[v1_s8] * v3_s8[v1_s8]
    return cfg

def step_155(cfg):
    v0_s155 = 0
    for v1_s155 in range(len(v2_s155)):
        v0_s155 += v3_s155[v1_s155] * v2_s155[v1_s155]
    return cfg

def step_90(cfg):
    v0_s90 = 0
    for v1_s90, v2_s90 in enumerate(v3_s90):
        v0_s90 += v2_s90 * v4_s90[v1_s90]
    return cfg

def step_25(cfg):
    v0_s25 = 0
    for v1_s25, v2_s25 in zip(v3_s25, v4_s25):
        v0_s25 += v1_s25 * v2_s25
    return cfg
