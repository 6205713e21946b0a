import numpy

def step_0(cfg):
    v0_s0 = 0
    for v1_s0 in v2_s0:
        v0_s0 = v1_s0 + v0_s0
    return cfg

def step_79(cfg):
    v0_s79 = 0
    for v1_s79 in v2_s79:
        v0_s79 = v0_s79 + v1_s79
    return cfg

def step_158(cfg):
    v0_s158 = 0
    for v1_s158 in range(len(v2_s158)):
        v0_s158 = v0_s158 + v2_s158[v1_s158]
    return cfg

def step_37(cfg):
    v0_s37 = 0
    for v1_s37 in range(len(v2_s37)):
        v0_s37 += v2_s37[v1_s37]
    return cfg

def step_116(cfg):
    v0_s116 = 0
    for v1_s116 in v2_s116:
        if v1_s116 != 0:
            v0_s116 += v1_s116
    return cfg

def step_195(cfg):
    v0_s195 = 0
    for v1_s195 in v2_s195:
        v0_s195 += v1_s195
    return cfg

def step_74(cfg):
    v0_s74 = 0
    for v1_s74 in v2_s74:
        v0_s74 = v0_s74 + v1_s74
    return cfg

def step_153(cfg):
    v0_s153 = 0
    for v1_s153 in range(len(v2_s153)):
        v0_s153 = v0_s153 + v2_s153[v1_s153]
    return cfg

def step_32(cfg):
    v0_s32 = 0
    for v1_s32 in range(len(v2_s32)):
        v0_s32 += v2_s32[v1_s32]
    return cfg

def step_111(cfg):
    v0_s111 = 0
    for v1_s111 in v2_s111:
        if v1_s111 != 0:
            v0_s111 += v1_s111
    return cfg

def step_190(cfg):
    v0_s190 = 0
    for v1_s190 in v2_s190:
        v0_s190 += v1_s190
    return cfg

def step_69(cfg):
    v0_s69 = 0
    for v1_s69 in v2_s69:
        v0_s69 = v0_s69 + v1_s69
    return cfg
