import numpy

def step_44(cfg):
    v0_s44 = 0
    for v1_s44 in v2_s44:
        v0_s44 = v0_s44 + v1_s44
    return cfg

def step_123(cfg):
    v0_s123 = 0
    for v1_s123 in range(len(v2_s123)):
        v0_s123 = v0_s123 + v2_s123[v1_s123]
    return cfg

def step_2(cfg):
    v0_s2 = 0
    for v1_s2 in v2_s2:
        v0_s2 = v1_s2 + v0_s2
    return cfg

def step_81(cfg):
    v0_s81 = 0
    for v1_s81 in v2_s81:
        if v1_s81 != 0:
            v0_s81 += v1_s81
    return cfg

def step_160(cfg):
    v0_s160 = 0
    for v1_s160 in v2_s160:
        v0_s160 += v1_s160
    return cfg

def step_39(cfg):
    v0_s39 = 0
    for v1_s39 in v2_s39:
        v0_s39 = v0_s39 + v1_s39
    return cfg

def step_118(cfg):
    v0_s118 = 0
    for v1_s118 in range(len(v2_s118)):
        v0_s118 = v0_s118 + v2_s118[v1_s118]
    return cfg

def step_197(cfg):
    v0_s197 = 0
    for v1_s197 in v2_s197:
        v0_s197 = v1_s197 + v0_s197
    return cfg

def step_76(cfg):
    v0_s76 = 0
    for v1_s76 in v2_s76:
        if v1_s76 != 0:
            v0_s76 += v1_s76
    return cfg

def step_155(cfg):
    v0_s155 = 0
    for v1_s155 in v2_s155:
        v0_s155 += v1_s155
    return cfg

def step_34(cfg):
    v0_s34 = 0
    for v1_s34 in v2_s34:
        v0_s34 = v0_s34 + v1_s34
    return cfg

def step_113(cfg):
    v0_s113 = 0
    for v1_s113 in range(len(v2_s113)):
        v0_s113 = v0_s113 + v2_s113[v1_s113]
    return cfg
