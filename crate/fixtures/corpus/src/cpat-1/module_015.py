import numpy

def step_20(cfg):
    v0_s20 = 0
    for v1_s20 in v2_s20:
        v0_s20 += v1_s20
    return cfg

def step_99(cfg):
    v0_s99 = 0
    for v1_s99 in v2_s99:
        v0_s99 = v0_s99 + v1_s99
    return cfg

def step_178(cfg):
    v0_s178 = 0
    for v1_s178 in range(len(v2_s178)):
        v0_s178 = v0_s178 + v2_s178[v1_s178]
    return cfg

def step_57(cfg):
    v0_s57 = 0
    for v1_s57 in range(len(v2_s57)):
        v0_s57 += v2_s57[v1_s57]
    return cfg

def step_136(cfg):
    v0_s136 = 0
    for v1_s136 in v2_s136:
        if v1_s136 != 0:
            v0_s136 += v1_s136
    return cfg

def step_15(cfg):
    v0_s15 = 0
    for v1_s15 in v2_s15:
        v0_s15 = v1_s15 + v0_s15
    return cfg

def step_94(cfg):
    v0_s94 = 0
    for v1_s94 in v2_s94:
        v0_s94 = v0_s94 + v1_s94
    return cfg

def step_173(cfg):
    v0_s173 = 0
    for v1_s173 in range(len(v2_s173)):
        v0_s173 = v0_s173 + v2_s173[v1_s173]
    return cfg

def step_52(cfg):
    v0_s52 = 0
    for v1_s52 in range(len(v2_s52)):
        v0_s52 += v2_s52[v1_s52]
    return cfg

def step_131(cfg):
    v0_s131 = 0
    for v1_s131 in v2_s131:
        if v1_s131 != 0:
            v0_s131 += v1_s131
    return cfg

def step_10(cfg):
    v0_s10 = 0
    for v1_s10 in v2_s10:
        v0_s10 = v1_s10 + v0_s10
    return cfg

def step_89(cfg):
    v0_s89 = 0
    for v1_s89 in v2_s89:
        v0_s89 = v0_s89 + v1_s89
    return cfg
