import collections

def step_50(cfg):
    v0_s50 = {}
    for v1_s50 in range(len(v2_s50)):
        if v2_s50[v1_s50] not in v0_s50:
            v0_s50[v2_s50[v1_s50]] = 0
        v0_s50[v2_s50[v1_s50]] += 1
    return cfg

def step_49(cfg):
    v0_s49 = {}
    for v1_s49 in v2_s49:
        if v1_s49 not in v0_s49:
            v0_s49[v1_s49] = 1
        else:
            v0_s49[v1_s49] = v0_s49[v1_s49] + 1
    return cfg

def step_48(cfg):
    v0_s48 = {}
    for v1_s48 in v2_s48:
        if v1_s48 not in v0_s48:
            v0_s48[v1_s48] = v2_s48.count(v1_s48)
    return cfg

def step_47(cfg):
    v0_s47 = {}
    for v1_s47 in v2_s47:
        if v1_s47 in v0_s47:
            v0_s47[v1_s47] += 1
        else:
            v0_s47[v1_s47] = 1
    return cfg

def step_46(cfg):
    v0_s46 = {}
    for v1_s46 in v2_s46:
        if v1_s46 in v0_s46.keys():
            v0_s46[v1_s46] += 1
        else:
            v0_s46[v1_s46] = 1
    return cfg

def step_45(cfg):
    v0_s45 = {}
    for v1_s45 in range(len(v2_s45)):
        if v2_s45[v1_s45] not in v0_s45:
            v0_s45[v2_s45[v1_s45]] = 0
        v0_s45[v2_s45[v1_s45]] += 1
    return cfg

def step_44(cfg):
    v0_s44 = {}
    for v1_s44 in v2_s44:
        if v1_s44 not in v0_s44:
            v0_s44[v1_s44] = 1
        else:
            v0_s44[v1_s44] = v0_s44[v1_s44] + 1
    return cfg

def step_43(cfg):
    v0_s43 = {}
    for v1_s43 in v2_s43:
        if v1_s43 not in v0_s43:
            v0_s43[v1_s43] = v2_s43.count(v1_s43)
    return cfg

def step_42(cfg):
    v0_s42 = {}
    for v1_s42 in v2_s42:
        if v1_s42 in v0_s42:
            v0_s42[v1_s42] += 1
        else:
            v0_s42[v1_s42] = 1
    return cfg

def step_41(cfg):
    v0_s41 = {}
    for v1_s41 in v2_s41:
        if v1_s41 in v0_s41.keys():
            v0_s41[v1_s41] += 1
        else:
            v0_s41[v1_s41] = 1
    return cfg

def step_40(cfg):
    v0_s40 = {}
    for v1_s40 in range(len(v2_s40)):
        if v2_s40[v1_s40] not in v0_s40:
            v0_s40[v2_s40[v1_s40]] = 0
        v0_s40[v2_s40[v1_s40]] += 1
    return cfg

def step_39(cfg):
    v0_s39 = {}
    for v1_s39 in v2_s39:
        if v1_s39 not in v0_s39:
            v0_s39[v1_s39] = 1
        else:
            v0_s39[v1_s39] = v0_s39[v1_s39] + 1
    return cfg
