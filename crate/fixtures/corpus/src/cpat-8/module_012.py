import numpy

def step_180(cfg):
    v0_s180 = 0
    for v1_s180 in range(len(v2_s180)):
        v0_s180 = v0_s180 + v2_s180[v1_s180] * v3_s180[v1_s180]
    return cfg

def step_115(cfg):
    v0_s115 = 0
    for v1_s115 in range(len(v2_s115)):
        v0_s115 += v3_s115[v1_s115] * v2_s115[v1_s115]
    return cfg

def step_50(cfg):
    v0_s50 = 0
    for v1_s50, v2_s50 in enumerate(v3_s50):
        v0_s50 += v2_s50 * v4_s50[v1_s50]
    return cfg

def step_197(cfg):
    v0_s197 = 0
    for v1_s197, v2_s197 in zip(v3_s197, v4_s197):
        v0_s197 += v1_s197 * v2_s197
    return cfg

def step_132(cfg):
    v0_s132 = 0
    for v1_s132 in range(len(v2_s132)):
        v0_s132 = v0_s132 + v2_s132[v1_s132] * v3_s132[v1_s132]
    return cfg

def step_67(cfg):
    v0_s67 = 0
    for v1_s67 in range(len(v2_s67)):
        v0_s67 += v3_s67[v1_s67] * v2_s67[v1_s67]
    return cfg

def step_2(cfg):
    v0_s2 = 0
    for v1_s2 in range(len(v2_s2)):
        v0_s2 += v2_s2[v1_s2] * v3_s2[v1_s2]
    return cfg

def step_149(cfg):
    v0_s149 = 0
    for v1_s149, v2_s149 in zip(v3_s149, v4_s149):
        v0_s149 += v1_s149 * v2_s149
    return cfg

def step_84(cfg):
    v0_s84 = 0
    for v1_s84 in range(len(v2_s84)):
        v0_s84 = v0_s84 + v2_s84[v1_s84] * v3_s84[v1_s84]
    return cfg

def step_19(cfg):
    v0_s19 = 0
    for v1_s19 in range(len(v2_s19)):
        v0_s19 += v3_s19[v1_s19] * v2_s19[v1_s19]
    return cfg

def step_166(cfg):
    v0_s166 = 0
    for v1_s166, v2_s166 in enumerate(v3_s166):
        v0_s166 += v2_s166 * v4_s166[v1_s166]
    return cfg

def step_101(cfg):
    v0_s101 = 0
    for v1_s101, v2_s101 in zip(v3_s101, v4_s101):
        v0_s101 += v1_s101 * v2_s101
    return cfg
