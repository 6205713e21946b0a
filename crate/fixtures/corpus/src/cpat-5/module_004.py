
def step_99(cfg):
    v0_s99 = {}
    for v1_s99 in v2_s99:
        v3_s99 = v4_s99(v1_s99)
        if v1_s99 in v0_s99:
            v0_s99[v1_s99].append(v3_s99)
        else:
            v0_s99[v1_s99] = [v3_s99]
    return cfg

def step_50(cfg):
    v0_s50 = {}
    for v1_s50 in range(len(v2_s50)):
        if v2_s50[v1_s50] in v0_s50:
            v0_s50[v2_s50[v1_s50]].append(v3_s50(v2_s50[v1_s50]))
        else:
            v0_s50[v2_s50[v1_s50]] = [v3_s50(v2_s50[v1_s50])]
    return cfg

def step_1(cfg):
    v0_s1 = {}
    for v1_s1 in v2_s1:
        if v1_s1 in v0_s1:
            v0_s1[v1_s1].append(v3_s1(v1_s1))
        else:
            v0_s1[v1_s1] = [v3_s1(v1_s1)]
    return cfg

def step_81(cfg):
    v0_s81 = {}
    for v1_s81 in v2_s81:
        if v1_s81 not in v0_s81:
            v0_s81[v1_s81] = []
        v0_s81[v1_s81].append(v3_s81(v1_s81))
    return cfg

def step_32(cfg):
    v0_s32 = {}
    for v1_s32 in v2_s32:
        if v1_s32 in v0_s32:
            v0_s32[v1_s32] = v0_s32[v1_s32] + [v3_s32(v1_s32)]
        else:
            v0_s32[v1_s32] = [v3_s32(v1_s32)]
    return cfg

def step_112(cfg):
    v0_s112 = {}
    for v1_s112 in v2_s112:
        if v1_s112 in v0_s112:
            v0_s112[v1_s112] = v0_s112[v1_s112] + [v3_s112(v1_s112)]
        else:
            v0_s112[v1_s112] = [v3_s112(v1_s112)]
    return cfg

def step_63(cfg):
    v0_s63 = {}
    for v1_s63 in v2_s63:
        if v1_s63 in v0_s63.keys():
            v0_s63[v1_s63].append(v3_s63(v1_s63))
        else:
            v0_s63[v1_s63] = [v3_s63(v1_s63)]
    return cfg

def step_14(cfg):
    v0_s14 = {}
    for v1_s14 in v2_s14:
        v3_s14 = v4_s14(v1_s14)
        if v1_s14 in v0_s14:
            v0_s14[v1_s14].append(v3_s14)
        else:
            v0_s14[v1_s14] = [v3_s14]
    return cfg

def step_94(cfg):
    v0_s94 = {}
    for v1_s94 in v2_s94:
        v3_s94 = v4_s94(v1_s94)
        if v1_s94 in v0_s94:
            v0_s94[v1_s94].append(v3_s94)
        else:
            v0_s94[v1_s94] = [v3_s94]
    return cfg

def step_45(cfg):
    v0_s45 = {}
    for v1_s45 in range(len(v2_s45)):
        if v2_s45[v1_s45] in v0_s45:
            v0_s45[v2_s45[v1_s45]].append(v3_s45(v2_s45[v1_s45]))
        else:
            v0_s45[v2_s45[v1_s45]] = [v3_s45(v2_s45[v1_s45])]
    return cfg

def step_125(cfg):
    v0_s125 = {}
    for v1_s125 in v2_s125:
        if v1_s125 in v0_s125:
            v0_s125[v1_s125].append(v3_s125(v1_s125))
        else:
            v0_s125[v1_s125] = [v3_s125(v1_s125)]
    return cfg

def step_76(cfg):
    v0_s76 = {}
    for v1_s76 in v2_s76:
        if v1_s76 not in v0_s76:
            v0_s76[v1_s76] = []
        v0_s76[v1_s76].append(v3_s76(v1_s76))
    return cfg
