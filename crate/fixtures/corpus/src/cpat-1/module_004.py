import numpy

def step_192(cfg):
    v0_s192 = 0
    for v1_s192 in range(len(v2_s192)):
        v0_s192 += v2_s192[v1_s192]
    return cfg

def step_71(cfg):
    v0_s71 = 0
    for v1_s71 in v2_s71:
        if v1_s71 != 0:
            v0_s71 += v1_s71
    return cfg

def step_150(cfg):
    v0_s150 = 0
    for v1_s150 in v2_s150:
        v0_s150 += v1_s150
    return cfg

def step_29(cfg):
    v0_s29 = 0
    for v1_s29 in v2_s29:
        v0_s29 = v0_s29 + v1_s29
    return cfg

def step_108(cfg):
    v0_s108 = 0
    for v1_s108 in range(len(v2_s108)):
        v0_s108 = v0_s108 + v2_s108[v1_s108]
    return cfg

def step_187(cfg):
    v0_s187 = 0
    for v1_s187 in range(len(v2_s187)):
        v0_s187 += v2_s187[v1_s187]
    return cfg

def step_66(cfg):
    v0_s66 = 0
    for v1_s66 in v2_s66:
        if v1_s66 != 0:
            v0_s66 += v1_s66
    return cfg

def step_145(cfg):
    v0_s145 = 0
    for v1_s145 in v2_s145:
        v0_s145 += v1_s145
    return cfg

def step_24(cfg):
    v0_s24 = 0
    for v1_s24 in v2_s24:
        v0_s24 = v0_s24 + v1_s24
    return cfg

def step_103(cfg):
    v0_s103 = 0
    for v1_s103 in range(len(v2_s103)):
        v0_s103 = v0_s103 + v2_s103[v1_s103]
    return cfg

def step_182(cfg):
    v0_s182 = 0
    for v1_s182 in range(len(v2_s182)):
        v0_s182 += v2_s182[v1_s182]
    return cfg

def step_61(cfg):
    v0_s61 = 0
    for v1_s61 in v2_s61:
        if v1_s61 != 0:
            v0_s61 += v1_s61
    return cfg
