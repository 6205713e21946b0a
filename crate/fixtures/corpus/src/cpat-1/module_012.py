import numpy

def step_176(cfg):
    v0_s176 = 0
    for v1_s176 in v2_s176:
        if v1_s176 != 0:
            v0_s176 += v1_s176
    return cfg

def step_55(cfg):
    v0_s55 = 0
    for v1_s55 in v2_s55:
        v0_s55 += v1_s55
    return cfg

def step_134(cfg):
    v0_s134 = 0
    for v1_s134 in v2_s134:
        v0_s134 = v0_s134 + v1_s134
    return cfg

def step_13(cfg):
    v0_s13 = 0
    for v1_s13 in v2_s13:
        v0_s13 = v1_s13 + v0_s13
    return cfg

def step_92(cfg):
    v0_s92 = 0
    for v1_s92 in range(len(v2_s92)):
        v0_s92 += v2_s92[v1_s92]
    return cfg

def step_171(cfg):
    v0_s171 = 0
    for v1_s171 in v2_s171:
        if v1_s171 != 0:
            v0_s171 += v1_s171
    return cfg

def step_50(cfg):
    v0_s50 = 0
    for v1_s50 in v2_s50:
        v0_s50 += v1_s50
    return cfg

def step_129(cfg):
    v0_s129 = 0
    for v1_s129 in v2_s129:
        v0_s129 = v0_s129 + v1_s129
    return cfg

def step_8(cfg):
    v0_s8 = 0
    for v1_s8 in v2_s8:
        v0_s8 = v1_s8 + v0_s8
    return cfg

def step_87(cfg):
    v0_s87 = 0
    for v1_s87 in range(len(v2_s87)):
        v0_s87 += v2_s87[v1_s87]
    return cfg

def step_166(cfg):
    v0_s166 = 0
    for v1_s166 in v2_s166:
        if v1_s166 != 0:
            v0_s166 += v1_s166
    return cfg

def step_45(cfg):
    v0_s45 = 0
    for v1_s45 in v2_s45:
        v0_s45 += v1_s45
    return cfg
