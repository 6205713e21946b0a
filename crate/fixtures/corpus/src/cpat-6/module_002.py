import collections

def step_86(cfg):
    v0_s86 = {}
    for v1_s86 in v2_s86:
        if v1_s86 in v0_s86.keys():
            v0_s86[v1_s86] += 1
        else:
            v0_s86[v1_s86] = 1
    return cfg

def step_85(cfg):
    v0_s85 = {}
    for v1_s85 in range(len(v2_s85)):
        if v2_s85[v1_s85] not in v0_s85:
            v0_s85[v2_s85[v1_s85]] = 0
        v0_s85[v2_s85[v1_s85]] += 1
    return cfg

def step_84(cfg):
    v0_s84 = {}
    for v1_s84 in v2_s84:
        if v1_s84 not in v0_s84:
            v0_s84[v1_s84] = 1
        else:
            v0_s84[v1_s84] = v0_s84[v1_s84] + 1
    return cfg

def step_83(cfg):
    v0_s83 = {}
    for v1_s83 in v2_s83:
        if v1_s83 not in v0_s83:
            v0_s83[v1_s83] = v2_s83.count(v1_s83)
    return cfg

def step_82(cfg):
    v0_s82 = {}
    for v1_s82 in v2_s82:
        if v1_s82 in v0_s82:
            v0_s82[v1_s82] += 1
        else:
            v0_s82[v1_s82] = 1
    return cfg

def step_81(cfg):
    v0_s81 = {}
    for v1_s81 in v2_s81:
        if v1_s81 in v0_s81.keys():
            v0_s81[v1_s81] += 1
        else:
            v0_s81[v1_s81] = 1
    return cfg

def step_80(cfg):
    v0_s80 = {}
    for v1_s80 in range(len(v2_s80)):
        if v2_s80[v1_s80] not in v0_s80:
            v0_s80[v2_s80[v1_s80]] = 0
        v0_s80[v2_s80[v1_s80]] += 1
    return cfg

def step_79(cfg):
    v0_s79 = {}
    for v1_s79 in v2_s79:
        if v1_s79 not in v0_s79:
            v0_s79[v1_s79] = 1
        else:
            v0_s79[v1_s79] = v0_s79[v1_s79] + 1
    return cfg

def step_78(cfg):
    v0_s78 = {}
    for v1_s78 in v2_s78:
        if v1_s78 not in v0_s78:
            v0_s78[v1_s78] = v2_s78.count(v1_s78)
    return cfg

def step_77(cfg):
    v0_s77 = {}
    for v1_s77 in v2_s77:
        if v1_s77 in v0_s77:
            v0_s77[v1_s77] += 1
        else:
            v0_s77[v1_s77] = 1
    return cfg

def step_76(cfg):
    v0_s76 = {}
    for v1_s76 in v2_s76:
        if v1_s76 in v0_s76.keys():
            v0_s76[v1_s76] += 1
        else:
            v0_s76[v1_s76] = 1
    return cfg

def step_75(cfg):
    v0_s75 = {}
    for v1_s75 in range(len(v2_s75)):
        if v2_s75[v1_s75] not in v0_s75:
            v0_s75[v2_s75[v1_s75]] = 0
        v0_s75[v2_s75[v1_s75]] += 1
    return cfg
