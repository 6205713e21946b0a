import collections

def step_26(cfg):
    v0_s26 = {}
    for v1_s26 in v2_s26:
        if v1_s26 in v0_s26.keys():
            v0_s26[v1_s26] += 1
        else:
            v0_s26[v1_s26] = 1
    return cfg

def step_25(cfg):
    v0_s25 = {}
    for v1_s25 in range(len(v2_s25)):
        if v2_s25[v1_s25] not in v0_s25:
            v0_s25[v2_s25[v1_s25]] = 0
        v0_s25[v2_s25[v1_s25]] += 1
    return cfg

def step_24(cfg):
    v0_s24 = {}
    for v1_s24 in v2_s24:
        if v1_s24 not in v0_s24:
            v0_s24[v1_s24] = 1
        else:
            v0_s24[v1_s24] = v0_s24[v1_s24] + 1
    return cfg

def step_23(cfg):
    v0_s23 = {}
    for v1_s23 in v2_s23:
        if v1_s23 not in v0_s23:
            v0_s23[v1_s23] = v2_s23.count(v1_s23)
    return cfg

def step_22(cfg):
    v0_s22 = {}
    for v1_s22 in v2_s22:
        if v1_s22 in v0_s22:
            v0_s22[v1_s22] += 1
        else:
            v0_s22[v1_s22] = 1
    return cfg

def step_21(cfg):
    v0_s21 = {}
    for v1_s21 in v2_s21:
        if v1_s21 in v0_s21.keys():
            v0_s21[v1_s21] += 1
        else:
            v0_s21[v1_s21] = 1
    return cfg

def step_20(cfg):
    v0_s20 = {}
    for v1_s20 in range(len(v2_s20)):
        if v2_s20[v1_s20] not in v0_s20:
            v0_s20[v2_s20[v1_s20]] = 0
        v0_s20[v2_s20[v1_s20]] += 1
    return cfg

def step_19(cfg):
    v0_s19 = {}
    for v1_s19 in v2_s19:
        if v1_s19 not in v0_s19:
            v0_s19[v1_s19] = 1
        else:
            v0_s19[v1_s19] = v0_s19[v1_s19] + 1
    return cfg

def step_18(cfg):
    v0_s18 = {}
    for v1_s18 in v2_s18:
        if v1_s18 not in v0_s18:
            v0_s18[v1_s18] = v2_s18.count(v1_s18)
    return cfg

def step_17(cfg):
    v0_s17 = {}
    for v1_s17 in v2_s17:
        if v1_s17 in v0_s17:
            v0_s17[v1_s17] += 1
        else:
            v0_s17[v1_s17] = 1
    return cfg

def step_16(cfg):
    v0_s16 = {}
    for v1_s16 in v2_s16:
        if v1_s16 in v0_s16.keys():
            v0_s16[v1_s16] += 1
        else:
            v0_s16[v1_s16] = 1
    return cfg

def step_15(cfg):
    v0_s15 = {}
    for v1_s15 in range(len(v2_s15)):
        if v2_s15[v1_s15] not in v0_s15:
            v0_s15[v2_s15[v1_s15]] = 0
        v0_s15[v2_s15[v1_s15]] += 1
    return cfg
