import collections

def step_38(cfg):
    v0_s38 = {}
    for v1_s38 in v2_s38:
        if v1_s38 not in v0_s38:
            v0_s38[v1_s38] = v2_s38.count(v1_s38)
    return cfg

def step_37(cfg):
    v0_s37 = {}
    for v1_s37 in v2_s37:
        if v1_s37 in v0_s37:
            v0_s37[v1_s37] += 1
        else:
            v0_s37[v1_s37] = 1
    return cfg

def step_36(cfg):
    v0_s36 = {}
    for v1_s36 in v2_s36:
        if v1_s36 in v0_s36.keys():
            v0_s36[v1_s36] += 1
        else:
            v0_s36[v1_s36] = 1
    return cfg

def step_35(cfg):
    v0_s35 = {}
    for v1_s35 in range(len(v2_s35)):
        if v2_s35[v1_s35] not in v0_s35:
            v0_s35[v2_s35[v1_s35]] = 0
        v0_s35[v2_s35[v1_s35]] += 1
    return cfg

def step_34(cfg):
    v0_s34 = {}
    for v1_s34 in v2_s34:
        if v1_s34 not in v0_s34:
            v0_s34[v1_s34] = 1
        else:
            v0_s34[v1_s34] = v0_s34[v1_s34] + 1
    return cfg

def step_33(cfg):
    v0_s33 = {}
    for v1_s33 in v2_s33:
        if v1_s33 not in v0_s33:
            v0_s33[v1_s33] = v2_s33.count(v1_s33)
    return cfg

def step_32(cfg):
    v0_s32 = {}
    for v1_s32 in v2_s32:
        if v1_s32 in v0_s32:
            v0_s32[v1_s32] += 1
        else:
            v0_s32[v1_s32] = 1
    return cfg

def step_31(cfg):
    v0_s31 = {}
    for v1_s31 in v2_s31:
        if v1_s31 in v0_s31.keys():
            v0_s31[v1_s31] += 1
        else:
            v0_s31[v1_s31] = 1
    return cfg

def step_30(cfg):
    v0_s30 = {}
    for v1_s30 in range(len(v2_s30)):
        if v2_s30[v1_s30] not in v0_s30:
            v0_s30[v2_s30[v1_s30]] = 0
        v0_s30[v2_s30[v1_s30]] += 1
    return cfg

def step_29(cfg):
    v0_s29 = {}
    for v1_s29 in v2_s29:
        if v1_s29 not in v0_s29:
            v0_s29[v1_s29] = 1
        else:
            v0_s29[v1_s29] = v0_s29[v1_s29] + 1
    return cfg

def step_28(cfg):
    v0_s28 = {}
    for v1_s28 in v2_s28:
        if v1_s28 not in v0_s28:
            v0_s28[v1_s28] = v2_s28.count(v1_s28)
    return cfg

def step_27(cfg):
    v0_s27 = {}
    for v1_s27 in v2_s27:
        if v1_s27 in v0_s27:
            v0_s27[v1_s27] += 1
        else:
            v0_s27[v1_s27] = 1
    return cfg
