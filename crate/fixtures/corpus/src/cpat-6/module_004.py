import collections

def step_62(cfg):
    v0_s62 = {}
    for v1_s62 in v2_s62:
        if v1_s62 in v0_s62:
            v0_s62[v1_s62] += 1
        else:
            v0_s62[v1_s62] = 1
    return cfg

def step_61(cfg):
    v0_s61 = {}
    for v1_s61 in v2_s61:
        if v1_s61 in v0_s61.keys():
            v0_s61[v1_s61] += 1
        else:
            v0_s61[v1_s61] = 1
    return cfg

def step_60(cfg):
    v0_s60 = {}
    for v1_s60 in range(len(v2_s60)):
        if v2_s60[v1_s60] not in v0_s60:
            v0_s60[v2_s60[v1_s60]] = 0
        v0_s60[v2_s60[v1_s60]] += 1
    return cfg

def step_59(cfg):
    v0_s59 = {}
    for v1_s59 in v2_s59:
        if v1_s59 not in v0_s59:
            v0_s59[v1_s59] = 1
        else:
            v0_s59[v1_s59] = v0_s59[v1_s59] + 1
    return cfg

def step_58(cfg):
    v0_s58 = {}
    for v1_s58 in v2_s58:
        if v1_s58 not in v0_s58:
            v0_s58[v1_s58] = v2_s58.count(v1_s58)
    return cfg

def step_57(cfg):
    v0_s57 = {}
    for v1_s57 in v2_s57:
        if v1_s57 in v0_s57:
            v0_s57[v1_s57] += 1
        else:
            v0_s57[v1_s57] = 1
    return cfg

def step_56(cfg):
    v0_s56 = {}
    for v1_s56 in v2_s56:
        if v1_s56 in v0_s56.keys():
            v0_s56[v1_s56] += 1
        else:
            v0_s56[v1_s56] = 1
    return cfg

def step_55(cfg):
    v0_s55 = {}
    for v1_s55 in range(len(v2_s55)):
        if v2_s55[v1_s55] not in v0_s55:
            v0_s55[v2_s55[v1_s55]] = 0
        v0_s55[v2_s55[v1_s55]] += 1
    return cfg

def step_54(cfg):
    v0_s54 = {}
    for v1_s54 in v2_s54:
        if v1_s54 not in v0_s54:
            v0_s54[v1_s54] = 1
        else:
            v0_s54[v1_s54] = v0_s54[v1_s54] + 1
    return cfg

def step_53(cfg):
    v0_s53 = {}
    for v1_s53 in v2_s53:
        if v1_s53 not in v0_s53:
            v0_s53[v1_s53] = v2_s53.count(v1_s53)
    return cfg

def step_52(cfg):
    v0_s52 = {}
    for v1_s52 in v2_s52:
        if v1_s52 in v0_s52:
            v0_s52[v1_s52] += 1
        else:
            v0_s52[v1_s52] = 1
    return cfg

def step_51(cfg):
    v0_s51 = {}
    for v1_s51 in v2_s51:
        if v1_s51 in v0_s51.keys():
            v0_s51[v1_s51] += 1
        else:
            v0_s51[v1_s51] = 1
    return cfg
