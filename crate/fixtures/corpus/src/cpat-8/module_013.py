import numpy

def step_36(cfg):
    v0_s36 = 0
    for v1_s36 in range(len(v2_s36)):
        v0_s36 = v0_s36 + v2_s36[v1_s36] * v3_s36[v1_s36]
    return cfg

def step_183(cfg):
    v0_s183 = 0
    for v1_s183 in range(len(v2_s183)):
        v0_s183 += v3_s183[v1_s183] * v2_s183[v1_s183]
    return cfg

def step_118(cfg):
    v0_s118 = 0
    for v1_s118, v2_s118 in enumerate(v3_s118):
        v0_s118 += v2_s118 * v4_s118[v1_s118]
    return cfg

def step_53(cfg):
    v0_s53 = 0
    for v1_s53, v2_s53 in zip(v3_s53, v4_s53):
        v0_s53 += v1_s53 * v2_s53
    return cfg

def step_200(cfg):
    v0_s200 = 0
    for v1_s200 in range(len(v2_s200)):
        v0_s200 = v0_s200 + v2_s200[v1_s200] * v3_s200[v1_s200]
    return cfg

def step_135(cfg):
    v0_s135 = 0
    for v1_s135 in range(len(v2_s135)):
        v0_s135 += v3_s135[v1_s135] * v2_s135[v1_s135]
    return cfg

def step_70(cfg):
    v0_s70 = 0
    for v1_s70, v2_s70 in enumerate(v3_s70):
        v0_s70 += v2_s70 * v4_s70[v1_s70]
    return cfg

def step_5(cfg):
    v0_s5 = 0
    for v1_s5 in range(len(v2_s5)):
        v0_s5 += v2_s5[v1_s5] * v3_s5[v1_s5]
    return cfg

def step_152(cfg):
    v0_s152 = 0
    for v1_s152 in range(len(v2_s152)):
        v0_s152 = v0_s152 + v2_s152[v1_s152] * v3_s152[v1_s152]
    return cfg

def step_87(cfg):
    v0_s87 = 0
    for v1_s87 in range(len(v2_s87)):
        v0_s87 += v3_s87[v1_s87] * v2_s87[v1_s87]
    return cfg

def step_22(cfg):
    v0_s22 = 0
    for v1_s22, v2_s22 in enumerate(v3_s22):
        v0_s22 += v2_s22 * v4_s22[v1_s22]
    return cfg

def step_169(cfg):
    v0_s169 = 0
    for v1_s169, v2_s169 in zip(v3_s169, v4_s169):
        v0_s169 += v1_s169 * v2_s169
    return cfg
