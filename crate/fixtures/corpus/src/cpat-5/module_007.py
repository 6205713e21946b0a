
def step_12(cfg):
    v0_s12 = {}
    for v1_s12 in v2_s12:
        if v1_s12 in v0_s12:
            v0_s12[v1_s12] = v0_s12[v1_s12] + [v3_s12(v1_s12)]
        else:
            v0_s12[v1_s12] = [v3_s12(v1_s12)]
    return cfg

def step_92(cfg):
    v0_s92 = {}
    for v1_s92 in v2_s92:
        if v1_s92 in v0_s92:
            v0_s92[v1_s92] = v0_s92[v1_s92] + [v3_s92(v1_s92)]
        else:
            v0_s92[v1_s92] = [v3_s92(v1_s92)]
    return cfg

def step_43(cfg):
    v0_s43 = {}
    for v1_s43 in v2_s43:
        if v1_s43 in v0_s43.keys():
            v0_s43[v1_s43].append(v3_s43(v1_s43))
        else:
            v0_s43[v1_s43] = [v3_s43(v1_s43)]
    return cfg

def step_123(cfg):
    v0_s123 = {}
    for v1_s123 in v2_s123:
        if v1_s123 in v0_s123.keys():
            v0_s123[v1_s123].append(v3_s123(v1_s123))
        else:
            v0_s123[v1_s123] = [v3_s123(v1_s123)]
    return cfg

def step_74(cfg):
    v0_s74 = {}
    for v1_s74 in v2_s74:
        v3_s74 = v4_s74(v1_s74)
        if v1_s74 in v0_s74:
            v0_s74[v1_s74].append(v3_s74)
        else:
            v0_s74[v1_s74] = [v3_s74]
    return cfg

def step_25(cfg):
    v0_s25 = {}
    for v1_s25 in range(len(v2_s25)):
        if v2_s25[v1_s25] in v0_s25:
            v0_s25[v2_s25[v1_s25]].append(v3_s25(v2_s25[v1_s25]))
        else:
            v0_s25[v2_s25[v1_s25]] = [v3_s25(v2_s25[v1_s25])]
    return cfg

def step_105(cfg):
    v0_s105 = {}
    for v1_s105 in range(len(v2_s105)):
        if v2_s105[v1_s105] in v0_s105:
            v0_s105[v2_s105[v1_s105]].append(v3_s105(v2_s105[v1_s105]))
        else:
            v0_s105[v2_s105[v1_s105]] = [v3_s105(v2_s105[v1_s105])]
    return cfg

def step_56(cfg):
    v0_s56 = {}
    for v1_s56 in v2_s56:
        if v1_s56 not in v0_s56:
            v0_s56[v1_s56] = []
        v0_s56[v1_s56].append(v3_s56(v1_s56))
    return cfg

def step_7(cfg):
    v0_s7 = {}
    for v1_s7 in v2_s7:
        if v1_s7 in v0_s7:
            v0_s7[v1_s7].append(v3_s7(v1_s7))
        else:
            v0_s7[v1_s7] = [v3_s7(v1_s7)]
    return cfg

def step_87(cfg):
    v0_s87 = {}
    for v1_s87 in v2_s87:
        if v1_s87 in v0_s87:
            v0_s87[v1_s87] = v0_s87[v1_s87] + [v3_s87(v1_s87)]
        else:
            v0_s87[v1_s87] = [v3_s87(v1_s87)]
    return cfg

def step_38(cfg):
    v0_s38 = {}
    for v1_s38 in v2_s38:
        if v1_s38 in v0_s38.keys():
            v0_s38[v1_s38].append(v3_s38(v1_s38))
        else:
            v0_s38[v1_s38] = [v3_s38(v1_s38)]
    return cfg

def step_118(cfg):
    v0_s118 = {}
    for v1_s118 in v2_s118:
        if v1_s118 in v0_s118.keys():
            v0_s118[v1_s118].append(v3_s118(v1_s118))
        else:
            v0_s118[v1_s118] = [v3_s118(v1_s118)]
    return cfg
