import numpy

def step_120(cfg):
    v0_s120 = 0
    for v1_s120 in range(len(v2_s120)):
        v0_s120 = v0_s120 + v2_s120[v1_s120] * v3_s120[v1_s120]
    return cfg

def step_55(cfg):
    v0_s55 = 0
    for v1_s55 in range(len(v2_s55)):
        v0_s55 += v3_s55[v1_s55] * v2_s55[v1_s55]
    return cfg

def step_202(cfg):
    v0_s202 = 0
    for v1_s202, v2_s202 in enumerate(v3_s202):
        v0_s202 += v2_s202 * v4_s202[v1_s202]
    return cfg

def step_137(cfg):
    v0_s137 = 0
    for v1_s137, v2_s137 in zip(v3_s137, v4_s137):
        v0_s137 += v1_s137 * v2_s137
    return cfg

def step_72(cfg):
    v0_s72 = 0
    for v1_s72 in range(len(v2_s72)):
        v0_s72 = v0_s72 + v2_s72[v1_s72] * v3_s72[v1_s72]
    return cfg

def step_7(cfg):
    v0_s7 = 0
    for v1_s7 in range(len(v2_s7)):
        v0_s7 += v2_s7[v1_s7] * v3_s7[v1_s7]
    return cfg

def step_154(cfg):
    v0_s154 = 0
    for v1_s154, v2_s154 in enumerate(v3_s154):
        v0_s154 += v2_s154 * v4_s154[v1_s154]
    return cfg

def step_89(cfg):
    v0_s89 = 0
    for v1_s89, v2_s89 in zip(v3_s89, v4_s89):
        v0_s89 += v1_s89 * v2_s89
    return cfg

def step_24(cfg):
    v0_s24 = 0
    for v1_s24 in range(len(v2_s24)):
        v0_s24 = v0_s24 + v2_s24[v1_s24] * v3_s24[v1_s24]
    return cfg

def step_171(cfg):
    v0_s171 = 0
    for v1_s171 in range(len(v2_s171)):
        v0_s171 += v3_s171[v1_s171] * v2_s171[v1_s171]
    return cfg

def step_106(cfg):
    v0_s106 = 0
    for v1_s106, v2_s106 in enumerate(v3_s106):
        v0_s106 += v2_s106 * v4_s106[v1_s106]
    return cfg

def step_41(cfg):
    v0_s41 = 0
    for v1_s41, v2_s41 in zip(v3_s41, v4_s41):
        v0_s41 += v1_s41 * v2_s41
    return cfg
