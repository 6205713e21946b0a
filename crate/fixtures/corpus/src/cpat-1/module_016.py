import numpy

def step_168(cfg):
    v0_s168 = 0
    for v1_s168 in range(len(v2_s168)):
        v0_s168 = v0_s168 + v2_s168[v1_s168]
    return cfg

def step_47(cfg):
    v0_s47 = 0
    for v1_s47 in range(len(v2_s47)):
        v0_s47 += v2_s47[v1_s47]
    return cfg

def step_126(cfg):
    v0_s126 = 0
    for v1_s126 in v2_s126:
        if v1_s126 != 0:
            v0_s126 += v1_s126
    return cfg

def step_5(cfg):
    v0_s5 = 0
    for v1_s5 in v2_s5:
        v0_s5 = v1_s5 + v0_s5
    return cfg

def step_84(cfg):
    v0_s84 = 0
    for v1_s84 in v2_s84:
        v0_s84 = v0_s84 + v1_s84
    return cfg

def step_163(cfg):
    v0_s163 = 0
    for v1_s163 in range(len(v2_s163)):
        v0_s163 = v0_s163 + v2_s163[v1_s163]
    return cfg

def step_42(cfg):
    v0_s42 = 0
    for v1_s42 in range(len(v2_s42)):
        v0_s42 += v2_s42[v1_s42]
    return cfg

def step_121(cfg):
    v0_s121 = 0
    for v1_s121 in v2_s121:
        if v1_s121 != 0:
            v0_s121 += v1_s121
    return cfg
