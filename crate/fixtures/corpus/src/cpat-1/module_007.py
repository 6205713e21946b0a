import numpy

def step_36(cfg):
    v0_s36 = 0
    for v1_s36 in v2_s36:
        if v1_s36 != 0:
            v0_s36 += v1_s36
    return cfg

def step_115(cfg):
    v0_s115 = 0
    for v1_s115 in v2_s115:
        v0_s115 += v1_s115
    return cfg

def step_194(cfg):
    v0_s194 = 0
    for v1_s194 in v2_s194:
        v0_s194 = v0_s194 + v1_s194
    return cfg

def step_73(cfg):
    v0_s73 = 0
    for v1_s73 in range(len(v2_s73)):
        v0_s73 = v0_s73 + v2_s73[v1_s73]
    return cfg

def step_152(cfg):
    v0_s152 = 0
    for v1_s152 in range(len(v2_s152)):
        v0_s152 += v2_s152[v1_s152]
    return cfg

def step_31(cfg):
    v0_s31 = 0
    for v1_s31 in v2_s31:
        if v1_s31 != 0:
            v0_s31 += v1_s31
    return cfg

def step_110(cfg):
    v0_s110 = 0
    for v1_s110 in v2_s110:
        v0_s110 += v1_s110
    return cfg

def step_189(cfg):
    v0_s189 = 0
    for v1_s189 in v2_s189:
        v0_s189 = v0_s189 + v1_s189
    return cfg

def step_68(cfg):
    v0_s68 = 0
    for v1_s68 in range(len(v2_s68)):
        v0_s68 = v0_s68 + v2_s68[v1_s68]
    return cfg

def step_147(cfg):
    v0_s147 = 0
    for v1_s147 in range(len(v2_s147)):
        v0_s147 += v2_s147[v1_s147]
    return cfg

def step_26(cfg):
    v0_s26 = 0
    for v1_s26 in v2_s26:
        if v1_s26 != 0:
            v0_s26 += v1_s26
    return cfg

def step_105(cfg):
    v0_s105 = 0
    for v1_s105 in v2_s105:
        v0_s105 += v1_s105
    return cfg
