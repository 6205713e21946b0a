import collections

def step_14(cfg):
    v0_s14 = {}
    for v1_s14 in v2_s14:
        if v1_s14 not in v0_s14:
            v0_s14[v1_s14] = 1
        else:
            v0_s14[v1_s14] = v0_s14[v1_s14] + 1
    return cfg

def step_13(cfg):
    v0_s13 = {}
    for v1_s13 in v2_s13:
        if v1_s13 not in v0_s13:
            v0_s13[v1_s13] = v2_s13.count(v1_s13)
    return cfg

def step_12(cfg):
    v0_s12 = {}
    for v1_s12 in v2_s12:
        if v1_s12 in v0_s12:
            v0_s12[v1_s12] += 1
        else:
            v0_s12[v1_s12] = 1
    return cfg

def step_11(cfg):
    v0_s11 = {}
    for v1_s11 in v2_s11:
        if v1_s11 in v0_s11.keys():
            v0_s11[v1_s11] += 1
        else:
            v0_s11[v1_s11] = 1
    return cfg

def step_10(cfg):
    v0_s10 = {}
    for v1_s10 in v2_s10:
        if v1_s10 not in v0_s10:
            v0_s10[v1_s10] = 0
        v0_s10[v1_s10] += 1
    return cfg

def step_9(cfg):
    v0_s9 = {}
    for v1_s9 in v2_s9:
        if v1_s9 not in v0_s9:
            v0_s9[v1_s9] = 0
        v0_s9[v1_s9] += 1
    return cfg

def step_8(cfg):
    v0_s8 = {}
    for v1_s8 in v2_s8:
        if v1_s8 not in v0_s8:
            v0_s8[v1_s8] = 0
        v0_s8[v1_s8] += 1
    return cfg

def step_7(cfg):
    v0_s7 = {}
    for v1_s7 in v2_s7:
        if v1_s7 not in v0_s7:
            v0_s7[v1_s7] = 0
        v0_s7[v1_s7] += 1
    return cfg

def step_6(cfg):
    v0_s6 = {}
    for v1_s6 in v2_s6:
        if v1_s6 not in v0_s6:
            v0_s6[v1_s6] = 0
        v0_s6[v1_s6] += 1
    return cfg

def step_5(cfg):
    v0_s5 = {}
    for v1_s5 in v2_s5:
        if v1_s5 not in v0_s5:
            v0_s5[v1_s5] = 0
        v0_s5[v1_s5] += 1
    return cfg

def step_4(cfg):
    v0_s4 = {}
    for v1_s4 in v2_s4:
        if v1_s4 not in v0_s4:
            v0_s4[v1_s4] = 0
        v0_s4[v1_s4] += 1
    return cfg

def step_3(cfg):
    v0_s3 = {}
    for v1_s3 in v2_s3:
        if v1_s3 not in v0_s3:
            v0_s3[v1_s3] = 0
        v0_s3[v1_s3] += 1
    return cfg
