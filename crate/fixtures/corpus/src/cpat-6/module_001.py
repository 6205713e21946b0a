import collections

def step_98(cfg):
    v0_s98 = {}
    for v1_s98 in v2_s98:
        if v1_s98 not in v0_s98:
            v0_s98[v1_s98] = v2_s98.count(v1_s98)
    return cfg

def step_97(cfg):
    v0_s97 = {}
    for v1_s97 in v2_s97:
        if v1_s97 in v0_s97:
            v0_s97[v1_s97] += 1
        else:
            v0_s97[v1_s97] = 1
    return cfg

def step_96(cfg):
    v0_s96 = {}
    for v1_s96 in v2_s96:
        if v1_s96 in v0_s96.keys():
            v0_s96[v1_s96] += 1
        else:
            v0_s96[v1_s96] = 1
    return cfg

def step_95(cfg):
    v0_s95 = {}
    for v1_s95 in range(len(v2_s95)):
        if v2_s95[v1_s95] not in v0_s95:
            v0_s95[v2_s95[v1_s95]] = 0
        v0_s95[v2_s95[v1_s95]] += 1
    return cfg

def step_94(cfg):
    v0_s94 = {}
    for v1_s94 in v2_s94:
        if v1_s94 not in v0_s94:
            v0_s94[v1_s94] = 1
        else:
            v0_s94[v1_s94] = v0_s94[v1_s94] + 1
    return cfg

def step_93(cfg):
    v0_s93 = {}
    for v1_s93 in v2_s93:
        if v1_s93 not in v0_s93:
            v0_s93[v1_s93] = v2_s93.count(v1_s93)
    return cfg

def step_92(cfg):
    v0_s92 = {}
    for v1_s92 in v2_s92:
        if v1_s92 in v0_s92:
            v0_s92[v1_s92] += 1
        else:
            v0_s92[v1_s92] = 1
    return cfg

def step_91(cfg):
    v0_s91 = {}
    for v1_s91 in v2_s91:
        if v1_s91 in v0_s91.keys():
            v0_s91[v1_s91] += 1
        else:
            v0_s91[v1_s91] = 1
    return cfg

def step_90(cfg):
    v0_s90 = {}
    for v1_s90 in range(len(v2_s90)):
        if v2_s90[v1_s90] not in v0_s90:
            v0_s90[v2_s90[v1_s90]] = 0
        v0_s90[v2_s90[v1_s90]] += 1
    return cfg

def step_89(cfg):
    v0_s89 = {}
    for v1_s89 in v2_s89:
        if v1_s89 not in v0_s89:
            v0_s89[v1_s89] = 1
        else:
            v0_s89[v1_s89] = v0_s89[v1_s89] + 1
    return cfg

def step_88(cfg):
    v0_s88 = {}
    for v1_s88 in v2_s88:
        if v1_s88 not in v0_s88:
            v0_s88[v1_s88] = v2_s88.count(v1_s88)
    return cfg

def step_87(cfg):
    v0_s87 = {}
    for v1_s87 in v2_s87:
        if v1_s87 in v0_s87:
            v0_s87[v1_s87] += 1
        else:
            v0_s87[v1_s87] = 1
    return cfg
