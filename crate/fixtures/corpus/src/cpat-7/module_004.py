import numpy

def step_24(cfg):
    v0_s24 = []
    for v1_s24 in range(len(v2_s24)):
        v0_s24.append(sum(v2_s24[0:v1_s24 + 1]))
    return cfg

def step_23(cfg):
    v0_s23 = []
    v1_s23 = 0
    for v2_s23 in v3_s23:
        v1_s23 += v2_s23
        v0_s23.append(v1_s23)
    return cfg

def step_22(cfg):
    v0_s22 = []
    for v1_s22 in range(len(v2_s22)):
        v0_s22 += [sum(v2_s22[:v1_s22 + 1])]
    return cfg

def step_21(cfg):
    v0_s21 = []
    for v1_s21 in range(1, len(v2_s21) + 1):
        v0_s21.append(sum(v2_s21[:v1_s21]))
    return cfg

def step_20(cfg):
    v0_s20 = []
    for v1_s20 in range(len(v2_s20)):
        if v1_s20 == 0:
            v0_s20.append(v2_s20[v1_s20])
        else:
            v0_s20.append(v0_s20[v1_s20 - 1] + v2_s20[v1_s20])
    return cfg

def step_19(cfg):
    v0_s19 = []
    for v1_s19 in range(len(v2_s19)):
        v0_s19.append(sum(v2_s19[0:v1_s19 + 1]))
    return cfg

def step_18(cfg):
    v0_s18 = []
    v1_s18 = 0
    for v2_s18 in v3_s18:
        v1_s18 += v2_s18
        v0_s18.append(v1_s18)
    return cfg

def step_17(cfg):
    v0_s17 = []
    for v1_s17 in range(len(v2_s17)):
        v0_s17 += [sum(v2_s17[:v1_s17 + 1])]
    return cfg

def step_16(cfg):
    v0_s16 = []
    for v1_s16 in range(1, len(v2_s16) + 1):
        v0_s16.append(sum(v2_s16[:v1_s16]))
    return cfg

def step_15(cfg):
    v0_s15 = []
    for v1_s15 in range(len(v2_s15)):
        if v1_s15 == 0:
            v0_s15.append(v2_s15[v1_s15])
        else:
            v0_s15.append(v0_s15[v1_s15 - 1] + v2_s15[v1_s15])
    return cfg

def step_14(cfg):
    v0_s14 = []
    for v1_s14 in range(len(v2_s14)):
        v0_s14.append(sum(v2_s14[0:v1_s14 + 1]))
    return cfg

def step_13(cfg):
    v0_s13 = []
    v1_s13 = 0
    for v2_s13 in v3_s13:
        v1_s13 += v2_s13
        v0_s13.append(v1_s13)
    return cfg
