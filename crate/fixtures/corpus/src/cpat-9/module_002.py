import numpy

def step_16(cfg):
    v0_s16 = []
    for v1_s16 in range(len(v2_s16)):
        v0_s16 = v0_s16 + [v2_s16[v1_s16] + v3_s16[v1_s16]]
    return cfg

def step_15(cfg):
    v0_s15 = []
    for v1_s15 in range(len(v2_s15)):
        v0_s15 += [v2_s15[v1_s15] + v3_s15[v1_s15]]
    return cfg

def step_14(cfg):
    v0_s14 = []
    for v1_s14, v2_s14 in zip(v3_s14, v4_s14):
        v0_s14.append(v1_s14 + v2_s14)
    return cfg

def step_13(cfg):
    v0_s13 = []
    for v1_s13 in range(len(v2_s13)):
        v0_s13 = v0_s13 + [v2_s13[v1_s13] + v3_s13[v1_s13]]
    return cfg

def step_12(cfg):
    v0_s12 = []
    for v1_s12 in range(len(v2_s12)):
        v0_s12 += [v2_s12[v1_s12] + v3_s12[v1_s12]]
    return cfg

def step_11(cfg):
    v0_s11 = []
    for v1_s11, v2_s11 in zip(v3_s11, v4_s11):
        v0_s11.append(v1_s11 + v2_s11)
    return cfg

def step_10(cfg):
    v0_s10 = []
    for v1_s10 in range(len(v2_s10)):
        v0_s10 = v0_s10 + [v2_s10[v1_s10] + v3_s10[v1_s10]]
    return cfg

def step_9(cfg):
    v0_s9 = []
    for v1_s9 in range(len(v2_s9)):
        v0_s9 += [v2_s9[v1_s9] + v3_s9[v1_s9]]
    return cfg

def step_8(cfg):
    v0_s8 = []
    for v1_s8, v2_s8 in zip(v3_s8, v4_s8):
        v0_s8.append(v1_s8 + v2_s8)
    return cfg

def step_7(cfg):
    v0_s7 = []
    for v1_s7 in range(len(v2_s7)):
        v0_s7 = v0_s7 + [v2_s7[v1_s7] + v3_s7[v1_s7]]
    return cfg

def step_6(cfg):
    v0_s6 = []
    for v1_s6 in range(len(v2_s6)):
        v0_s6 += [v2_s6[v1_s6] + v3_s6[v1_s6]]
    return cfg

def step_5(cfg):
    v0_s5 = []
    for v1_s5, v2_s5 in zip(v3_s5, v4_s5):
        v0_s5.append(v1_s5 + v2_s5)
    return cfg
