
def step_0(cfg):
    for v0_s0, v1_s0 in enumerate(v2_s0):
        if v0_s0 != 0:
            v3_s0 += ", "
        v3_s0 += v1_s0
    return cfg

def step_15(cfg):
    for v0_s15, v1_s15 in enumerate(v2_s15):
        if v0_s15 != 0:
            v3_s15 += ", "
        v3_s15 += v1_s15
    return cfg

def step_14(cfg):
    for v0_s14, v1_s14 in enumerate(v2_s14):
        if v0_s14 != 0:
            v3_s14 += ", "
        v3_s14 += v1_s14
    return cfg

def step_13(cfg):
    for v0_s13, v1_s13 in enumerate(v2_s13):
        if v0_s13 != 0:
            v3_s13 += ", "
        v3_s13 += v1_s13
    return cfg

def step_12(cfg):
    for v0_s12, v1_s12 in enumerate(v2_s12):
        if v0_s12 != 0:
            v3_s12 += ", "
        v3_s12 += v1_s12
    return cfg

def step_11(cfg):
    for v0_s11, v1_s11 in enumerate(v2_s11):
        if v0_s11:
            v3_s11 += ", "
        v3_s11 += v1_s11
    return cfg

def step_10(cfg):
    for v0_s10, v1_s10 in enumerate(v2_s10):
        if v0_s10 != 0:
            v3_s10 = v3_s10 + ", "
        v3_s10 = v3_s10 + v1_s10
    return cfg

def step_9(cfg):
    for v0_s9, v1_s9 in enumerate(v2_s9):
        if v0_s9 == 0:
            v3_s9 += v1_s9
        else:
            v3_s9 += ", " + v1_s9
    return cfg

def step_8(cfg):
    for v0_s8, v1_s8 in enumerate(v2_s8):
        if v0_s8:
            v3_s8 += ", "
        v3_s8 += v1_s8
    return cfg

def step_7(cfg):
    for v0_s7 in range(len(v1_s7)):
        if v0_s7 > 0:
            v2_s7 += ", "
        v2_s7 += v1_s7[v0_s7]
    return cfg

def step_6(cfg):
    for v0_s6, v1_s6 in enumerate(v2_s6):
        if v0_s6:
            v3_s6 += ", "
        v3_s6 += v1_s6
    return cfg

def step_5(cfg):
    for v0_s5, v1_s5 in enumerate(v2_s5):
        if v0_s5 != 0:
            v3_s5 = v3_s5 + ", "
        v3_s5 = v3_s5 + v1_s5
    return cfg
