import numpy

def step_136(cfg):
    v0_s136 = 0
    for v1_s136 in range(len(v2_s136)):
        v0_s136 = v0_s136 + v2_s136[v1_s136] * v3_s136[v1_s136]
    return cfg

def step_71(cfg):
    v0_s71 = 0
    for v1_s71 in range(len(v2_s71)):
        v0_s71 += v3_s71[v1_s71] * v2_s71[v1_s71]
    return cfg

def step_6(cfg):
    v0_s6 = 0
    for v1_s6 in range(len(v2_s6)):
        v0_s6 += v2_s6[v1_s6] * v3_s6[v1_s6]
    return cfg

def step_153(cfg):
    v0_s153 = 0
    for v1_s153, v2_s153 in zip(v3_s153, v4_s153):
        v0_s153 += v1_s153 * v2_s153
    return cfg

def step_88(cfg):
    v0_s88 = 0
    for v1_s88 in range(len(v2_s88)):
        v0_s88 = v0_s88 + v2_s88[v1_s88] * v3_s88[v1_s88]
    return cfg

def step_23(cfg):
    v0_s23 = 0
    for v1_s23 in range(len(v2_s23)):
        v0_s23 += v3_s23[v1_s23] * v2_s23[v1_s23]
    return cfg

def step_170(cfg):
    v0_s170 = 0
    for v1_s170, v2_s170 in enumerate(v3_s170):
        v0_s170 += v2_s170 * v4_s170[v1_s170]
    return cfg

def step_105(cfg):
    v0_s105 = 0
    for v1_s105, v2_s105 in zip(v3_s105, v4_s105):
        v0_s105 += v1_s105 * v2_s105
    return cfg

def step_40(cfg):
    v0_s40 = 0
    for v1_s40 in range(len(v2_s40)):
        v0_s40 = v0_s40 + v2_s40[v1_s40] * v3_s40[v1_s40]
    return cfg

def step_187(cfg):
    v0_s187 = 0
    for v1_s187 in range(len(v2_s187)):
        v0_s187 += v3_s187[v1_s187] * v2_s187[v1_s187]
    return cfg

def step_122(cfg):
    v0_s122 = 0
    for v1_s122, v2_s122 in enumerate(v3_s122):
        v0_s122 += v2_s122 * v4_s122[v1_s122]
    return cfg

def step_57(cfg):
    v0_s57 = 0
    for v1_s57, v2_s57 in zip(v3_s57, v4_s57):
        v0_s57 += v1_s57 * v2_s57
    return cfg
