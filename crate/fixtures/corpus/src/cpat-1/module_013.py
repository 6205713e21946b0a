import numpy

def step_124(cfg):
    v0_s124 = 0
    for v1_s124 in v2_s124:
        v0_s124 = v0_s124 + v1_s124
    return cfg

def step_3(cfg):
    v0_s3 = 0
    for v1_s3 in v2_s3:
        v0_s3 = v1_s3 + v0_s3
    return cfg

def step_82(cfg):
    v0_s82 = 0
    for v1_s82 in range(len(v2_s82)):
        v0_s82 += v2_s82[v1_s82]
    return cfg

def step_161(cfg):
    v0_s161 = 0
    for v1_s161 in v2_s161:
        if v1_s161 != 0:
            v0_s161 += v1_s161
    return cfg

def step_40(cfg):
    v0_s40 = 0
    for v1_s40 in v2_s40:
        v0_s40 += v1_s40
    return cfg

def step_119(cfg):
    v0_s119 = 0
    for v1_s119 in v2_s119:
        v0_s119 = v0_s119 + v1_s119
    return cfg

def step_198(cfg):
    v0_s198 = 0
    for v1_s198 in v2_s198:
        v0_s198 = v1_s198 + v0_s198
    return cfg

def step_77(cfg):
    v0_s77 = 0
    for v1_s77 in range(len(v2_s77)):
        v0_s77 += v2_s77[v1_s77]
    return cfg

def step_156(cfg):
    v0_s156 = 0
    for v1_s156 in v2_s156:
        if v1_s156 != 0:
            v0_s156 += v1_s156
    return cfg

def step_35(cfg):
    v0_s35 = 0
    for v1_s35 in v2_s35:
        v0_s35 += v1_s35
    return cfg

def step_114(cfg):
    v0_s114 = 0
    for v1_s114 in v2_s114:
        v0_s114 = v0_s114 + v1_s114
    return cfg

def step_193(cfg):
    v0_s193 = 0
    for v1_s193 in range(len(v2_s193)):
        v0_s193 = v0_s193 + v2_s193[v1_s193]
    return cfg
