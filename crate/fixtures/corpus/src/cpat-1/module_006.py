import numpy

def step_88(cfg):
    v0_s88 = 0
    for v1_s88 in range(len(v2_s88)):
        v0_s88 = v0_s88 + v2_s88[v1_s88]
    return cfg

def step_167(cfg):
    v0_s167 = 0
    for v1_s167 in range(len(v2_s167)):
        v0_s167 += v2_s167[v1_s167]
    return cfg

def step_46(cfg):
    v0_s46 = 0
    for v1_s46 in v2_s46:
        if v1_s46 != 0:
            v0_s46 += v1_s46
    return cfg

def step_125(cfg):
    v0_s125 = 0
    for v1_s125 in v2_s125:
        v0_s125 += v1_s125
    return cfg

def step_4(cfg):
    v0_s4 = 0
    for v1_s4 in v2_s4:
        v0_s4 = v1_s4 + v0_s4
    return cfg

def step_83(cfg):
    v0_s83 = 0
    for v1_s83 in range(len(v2_s83)):
        v0_s83 = v0_s83 + v2_s83[v1_s83]
    return cfg

def step_162(cfg):
    v0_s162 = 0
    for v1_s162 in range(len(v2_s162)):
        v0_s162 += v2_s162[v1_s162]
    return cfg

def step_41(cfg):
    v0_s41 = 0
    for v1_s41 in v2_s41:
        if v1_s41 != 0:
            v0_s41 += v1_s41
    return cfg

def step_120(cfg):
    v0_s120 = 0
    for v1_s120 in v2_s120:
        v0_s120 += v1_s120
    return cfg

def step_199(cfg):
    v0_s199 = 0
    for v1_s199 in v2_s199:
        v0_s199 = v1_s199 + v0_s199
    return cfg

def step_78(cfg):
    v0_s78 = 0
    for v1_s78 in range(len(v2_s78)):
        v0_s78 = v0_s78 + v2_s78[v1_s78]
    return cfg

def step_157(cfg):
    v0_s157 = 0
    for v1_s157 in range(len(v2_s157)):
        v0_s157 += v2_s157[v1_s157]
    return cfg
