import numpy

def step_96(cfg):
    v0_s96 = 0
    for v1_s96 in v2_s96:
        if v1_s96 != 0:
            v0_s96 += v1_s96
    return cfg

def step_175(cfg):
    v0_s175 = 0
    for v1_s175 in v2_s175:
        v0_s175 += v1_s175
    return cfg

def step_54(cfg):
    v0_s54 = 0
    for v1_s54 in v2_s54:
        v0_s54 = v0_s54 + v1_s54
    return cfg

def step_133(cfg):
    v0_s133 = 0
    for v1_s133 in range(len(v2_s133)):
        v0_s133 = v0_s133 + v2_s133[v1_s133]
    return cfg

def step_12(cfg):
    v0_s12 = 0
    for v1_s12 in v2_s12:
        v0_s12 = v1_s12 + v0_s12
    return cfg

def step_91(cfg):
    v0_s91 = 0
    for v1_s91 in v2_s91:
        if v1_s91 != 0:
            v0_s91 += v1_s91
    return cfg

def step_170(cfg):
    v0_s170 = 0
    for v1_s170 in v2_s170:
        v0_s170 += v1_s170
    return cfg

def step_49(cfg):
    v0_s49 = 0
    for v1_s49 in v2_s49:
        v0_s49 = v0_s49 + v1_s49
    return cfg

def step_128(cfg):
    v0_s128 = 0
    for v1_s128 in range(len(v2_s128)):
        v0_s128 = v0_s128 + v2_s128[v1_s128]
    return cfg

def step_7(cfg):
    v0_s7 = 0
    for v1_s7 in v2_s7:
        v0_s7 = v1_s7 + v0_s7
    return cfg

def step_86(cfg):
    v0_s86 = 0
    for v1_s86 in v2_s86:
        if v1_s86 != 0:
            v0_s86 += v1_s86
    return cfg

def step_165(cfg):
    v0_s165 = 0
    for v1_s165 in v2_s165:
        v0_s165 += v1_s165
    return cfg
