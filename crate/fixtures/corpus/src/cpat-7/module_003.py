import numpy

def step_36(cfg):
    v0_s36 = []
    for v1_s36 in range(1, len(v2_s36) + 1):
        v0_s36.append(sum(v2_s36[:v1_s36]))
    return cfg

def step_35(cfg):
    v0_s35 = []
    for v1_s35 in range(len(v2_s35)):
        if v1_s35 == 0:
            v0_s35.append(v2_s35[v1_s35])
        else:
            v0_s35.append(v0_s35[v1_s35 - 1] + v2_s35[v1_s35])
    return cfg

def step_34(cfg):
    v0_s34 = []
    for v1_s34 in range(len(v2_s34)):
        v0_s34.append(sum(v2_s34[0:v1_s34 + 1]))
    return cfg

def step_33(cfg):
    v0_s33 = []
    v1_s33 = 0
    for v2_s33 in v3_s33:
        v1_s33 += v2_s33
        v0_s33.append(v1_s33)
    return cfg

def step_32(cfg):
    v0_s32 = []
    for v1_s32 in range(len(v2_s32)):
        v0_s32 += [sum(v2_s32[:v1_s32 + 1])]
    return cfg

def step_31(cfg):
    v0_s31 = []
    for v1_s31 in range(1, len(v2_s31) + 1):
        v0_s31.append(sum(v2_s31[:v1_s31]))
    return cfg

def step_30(cfg):
    v0_s30 = []
    for v1_s30 in range(len(v2_s30)):
        if v1_s30 == 0:
            v0_s30.append(v2_s30[v1_s30])
        else:
            v0_s30.append(v0_s30[v1_s30 - 1] + v2_s30[v1_s30])
    return cfg

def step_29(cfg):
    v0_s29 = []
    for v1_s29 in range(len(v2_s29)):
        v0_s29.append(sum(v2_s29[0:v1_s29 + 1]))
    return cfg

def step_28(cfg):
    v0_s28 = []
    v1_s28 = 0
    for v2_s28 in v3_s28:
        v1_s28 += v2_s28
        v0_s28.append(v1_s28)
    return cfg

def step_27(cfg):
    v0_s27 = []
    for v1_s27 in range(len(v2_s27)):
        v0_s27 += [sum(v2_s27[:v1_s27 + 1])]
    return cfg

def step_26(cfg):
    v0_s26 = []
    for v1_s26 in range(1, len(v2_s26) + 1):
        v0_s26.append(sum(v2_s26[:v1_s26]))
    return cfg

def step_25(cfg):
    v0_s25 = []
    for v1_s25 in range(len(v2_s25)):
        if v1_s25 == 0:
            v0_s25.append(v2_s25[v1_s25])
        else:
            v0_s25.append(v0_s25[v1_s25 - 1] + v2_s25[v1_s25])
    return cfg
