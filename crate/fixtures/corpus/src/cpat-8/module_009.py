import numpy

def step_188(cfg):
    v0_s188 = 0
    for v1_s188 in range(len(v2_s188)):
        v0_s188 = v0_s188 + v2_s188[v1_s188] * v3_s188[v1_s188]
    return cfg

def step_123(cfg):
    v0_s123 = 0
    for v1_s123 in range(len(v2_s123)):
        v0_s123 += v3_s123[v1_s123] * v2_s123[v1_s123]
    return cfg

def step_58(cfg):
    v0_s58 = 0
    for v1_s58, v2_s58 in enumerate(v3_s58):
        v0_s58 += v2_s58 * v4_s58[v1_s58]
    return cfg

def step_205(cfg):
    v0_s205 = 0
    for v1_s205, v2_s205 in zip(v3_s205, v4_s205):
        v0_s205 += v1_s205 * v2_s205
    return cfg

def step_140(cfg):
    v0_s140 = 0
    for v1_s140 in range(len(v2_s140)):
        v0_s140 = v0_s140 + v2_s140[v1_s140] * v3_s140[v1_s140]
    return cfg

def step_75(cfg):
    v0_s75 = 0
    for v1_s75 in range(len(v2_s75)):
        v0_s75 += v3_s75[v1_s75] * v2_s75[v1_s75]
    return cfg

def step_10(cfg):
    v0_s10 = 0
    for v1_s10 in range(len(v2_s10)):
        v0_s10 += v2_s10[v1_s10] * v3_s10[v1_s10]
    return cfg

def step_157(cfg):
    v0_s157 = 0
    for v1_s157, v2_s157 in zip(v3_s157, v4_s157):
        v0_s157 += v1_s157 * v2_s157
    return cfg

def step_92(cfg):
    v0_s92 = 0
    for v1_s92 in range(len(v2_s92)):
        v0_s92 = v0_s92 + v2_s92[v1_s92] * v3_s92[v1_s92]
    return cfg

def step_27(cfg):
    v0_s27 = 0
    for v1_s27 in range(len(v2_s27)):
        v0_s27 += v3_s27[v1_s27] * v2_s27[v1_s27]
    return cfg

def step_174(cfg):
    v0_s174 = 0
    for v1_s174, v2_s174 in enumerate(v3_s174):
        v0_s174 += v2_s174 * v4_s174[v1_s174]
    return cfg

def step_109(cfg):
    v0_s109 = 0
    for v1_s109, v2_s109 in zip(v3_s109, v4_s109):
        v0_s109 += v1_s109 * v2_s109
    return cfg
