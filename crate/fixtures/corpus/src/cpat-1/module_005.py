import numpy

def step_140(cfg):
    v0_s140 = 0
    for v1_s140 in v2_s140:
        v0_s140 += v1_s140
    return cfg

def step_19(cfg):
    v0_s19 = 0
    for v1_s19 in v2_s19:
        v0_s19 = v0_s19 + v1_s19
    return cfg

def step_98(cfg):
    v0_s98 = 0
    for v1_s98 in range(len(v2_s98)):
        v0_s98 = v0_s98 + v2_s98[v1_s98]
    return cfg

def step_177(cfg):
    v0_s177 = 0
    for v1_s177 in range(len(v2_s177)):
        v0_s177 += v2_s177[v1_s177]
    return cfg

def step_56(cfg):
    v0_s56 = 0
    for v1_s56 in v2_s56:
        if v1_s56 != 0:
            v0_s56 += v1_s56
    return cfg

def step_135(cfg):
    v0_s135 = 0
    for v1_s135 in v2_s135:
        v0_s135 += v1_s135
    return cfg

def step_14(cfg):
    v0_s14 = 0
    for v1_s14 in v2_s14:
        v0_s14 = v1_s14 + v0_s14
    return cfg

def step_93(cfg):
    v0_s93 = 0
    for v1_s93 in range(len(v2_s93)):
        v0_s93 = v0_s93 + v2_s93[v1_s93]
    return cfg

def step_172(cfg):
    v0_s172 = 0
    for v1_s172 in range(len(v2_s172)):
        v0_s172 += v2_s172[v1_s172]
    return cfg

def step_51(cfg):
    v0_s51 = 0
    for v1_s51 in v2_s51:
        if v1_s51 != 0:
            v0_s51 += v1_s51
    return cfg

def step_130(cfg):
    v0_s130 = 0
    for v1_s130 in v2_s130:
        v0_s130 += v1_s130
    return cfg

def step_9(cfg):
    v0_s9 = 0
    for v1_s9 in v2_s9:
        v0_s9 = v1_s9 + v0_s9
    return cfg
