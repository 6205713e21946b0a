import collections

def step_0(cfg):
    v0_s0 = {}
    for v1_s0 in v2_s0:
        if v1_s0 not in v0_s0:
            v0_s0[v1_s0] = 0
        v0_s0[v1_s0] += 1
    return cfg

def step_109(cfg):
    v0_s109 = {}
    for v1_s109 in v2_s109:
        if v1_s109 not in v0_s109:
            v0_s109[v1_s109] = 0
        v0_s109[v1_s109] += 1
    return cfg

def step_108(cfg):
    v0_s108 = {}
    for v1_s108 in v2_s108:
        if v1_s108 not in v0_s108:
            v0_s108[v1_s108] = 0
        v0_s108[v1_s108] += 1
    return cfg

def step_107(cfg):
    v0_s107 = {}
    for v1_s107 in v2_s107:
        if v1_s107 not in v0_s107:
            v0_s107[v1_s107] = 0
        v0_s107[v1_s107] += 1
    return cfg

def step_106(cfg):
    v0_s106 = {}
    for v1_s106 in v2_s106:
        if v1_s106 not in v0_s106:
            v0_s106[v1_s106] = 0
        v0_s106[v1_s106] += 1
    return cfg

def step_105(cfg):
    v0_s105 = {}
    for v1_s105 in range(len(v2_s105)):
        if v2_s105[v1_s105] not in v0_s105:
            v0_s105[v2_s105[v1_s105]] = 0
        v0_s105[v2_s105[v1_s105]] += 1
    return cfg

def step_104(cfg):
    v0_s104 = {}
    for v1_s104 in v2_s104:
        if v1_s104 not in v0_s104:
            v0_s104[v1_s104] = 1
        else:
            v0_s104[v1_s104] = v0_s104[v1_s104] + 1
    return cfg

def step_103(cfg):
    v0_s103 = {}
    for v1_s103 in v2_s103:
        if v1_s103 not in v0_s103:
            v0_s103[v1_s103] = v2_s103.count(v1_s103)
    return cfg

def step_102(cfg):
    v0_s102 = {}
    for v1_s102 in v2_s102:
        if v1_s102 in v0_s102:
            v0_s102[v1_s102] += 1
        else:
            v0_s102[v1_s102] = 1
    return cfg

def step_101(cfg):
    v0_s101 = {}
    for v1_s101 in v2_s101:
        if v1_s101 in v0_s101.keys():
            v0_s101[v1_s101] += 1
        else:
            v0_s101[v1_s101] = 1
    return cfg

def step_100(cfg):
    v0_s100 = {}
    for v1_s100 in range(len(v2_s100)):
        if v2_s100[v1_s100] not in v0_s100:
            v0_s100[v2_s100[v1_s100]] = 0
        v0_s100[v2_s100[v1_s100]] += 1
    return cfg

def step_99(cfg):
    v0_s99 = {}
    for v1_s99 in v2_s99:
        if v1_s99 not in v0_s99:
            v0_s99[v1_s99] = 1
        else:
            v0_s99[v1_s99] = v0_s99[v1_s99] + 1
    return cfg
