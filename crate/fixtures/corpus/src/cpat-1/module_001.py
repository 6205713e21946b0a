import numpy

def step_148(cfg):
    v0_s148 = 0
    for v1_s148 in range(len(v2_s148)):
        v0_s148 = v0_s148 + v2_s148[v1_s148]
    return cfg

def step_27(cfg):
    v0_s27 = 0
    for v1_s27 in range(len(v2_s27)):
        v0_s27 += v2_s27[v1_s27]
    return cfg

def step_106(cfg):
    v0_s106 = 0
    for v1_s106 in v2_s106:
        if v1_s106 != 0:
            v0_s106 += v1_s106
    return cfg

def step_185(cfg):
    v0_s185 = 0
    for v1_s185 in v2_s185:
        v0_s185 += v1_s185
    return cfg

def step_64(cfg):
    v0_s64 = 0
    for v1_s64 in v2_s64:
        v0_s64 = v0_s64 + v1_s64
    return cfg

def step_143(cfg):
    v0_s143 = 0
    for v1_s143 in range(len(v2_s143)):
        v0_s143 = v0_s143 + v2_s143[v1_s143]
    return cfg

def step_22(cfg):
    v0_s22 = 0
    for v1_s22 in range(len(v2_s22)):
        v0_s22 += v2_s22[v1_s22]
    return cfg

def step_101(cfg):
    v0_s101 = 0
    for v1_s101 in v2_s101:
        if v1_s101 != 0:
            v0_s101 += v1_s101
    return cfg

def step_180(cfg):
    v0_s180 = 0
    for v1_s180 in v2_s180:
        v0_s180 += v1_s180
    return cfg

def step_59(cfg):
    v0_s59 = 0
    for v1_s59 in v2_s59:
        v0_s59 = v0_s59 + v1_s59
    return cfg

def step_138(cfg):
    v0_s138 = 0
    for v1_s138 in range(len(v2_s138)):
        v0_s138 = v0_s138 + v2_s138[v1_s138]
    return cfg

def step_17(cfg):
    v0_s17 = 0
    for v1_s17 in range(len(v2_s17)):
        v0_s17 += v2_s17[v1_s17]
    return cfg
