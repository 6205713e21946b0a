import numpy

def step_72(cfg):
    v0_s72 = 0
    for v1_s72 in range(len(v2_s72)):
        v0_s72 += v2_s72[v1_s72]
    return cfg

def step_151(cfg):
    v0_s151 = 0
    for v1_s151 in v2_s151:
        if v1_s151 != 0:
            v0_s151 += v1_s151
    return cfg

def step_30(cfg):
    v0_s30 = 0
    for v1_s30 in v2_s30:
        v0_s30 += v1_s30
    return cfg

def step_109(cfg):
    v0_s109 = 0
    for v1_s109 in v2_s109:
        v0_s109 = v0_s109 + v1_s109
    return cfg

def step_188(cfg):
    v0_s188 = 0
    for v1_s188 in range(len(v2_s188)):
        v0_s188 = v0_s188 + v2_s188[v1_s188]
    return cfg

def step_67(cfg):
    v0_s67 = 0
    for v1_s67 in range(len(v2_s67)):
        v0_s67 += v2_s67[v1_s67]
    return cfg

def step_146(cfg):
    v0_s146 = 0
    for v1_s146 in v2_s146:
        if v1_s146 != 0:
            v0_s146 += v1_s146
    return cfg

def step_25(cfg):
    v0_s25 = 0
    for v1_s25 in v2_s25:
        v0_s25 += v1_s25
    return cfg

def step_104(cfg):
    v0_s104 = 0
    for v1_s104 in v2_s104:
        v0_s104 = v0_s104 + v1_s104
    return cfg

def step_183(cfg):
    v0_s183 = 0
    for v1_s183 in range(len(v2_s183)):
        v0_s183 = v0_s183 + v2_s183[v1_s183]
    return cfg

def step_62(cfg):
    v0_s62 = 0
    for v1_s62 in range(len(v2_s62)):
        v0_s62 += v2_s62[v1_s62]
    return cfg

def step_141(cfg):
    v0_s141 = 0
    for v1_s141 in v2_s141:
        if v1_s141 != 0:
            v0_s141 += v1_s141
    return cfg
