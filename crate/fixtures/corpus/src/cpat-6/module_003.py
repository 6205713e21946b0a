import collections

def step_74(cfg):
    v0_s74 = {}
    for v1_s74 in v2_s74:
        if v1_s74 not in v0_s74:
            v0_s74[v1_s74] = 1
        else:
            v0_s74[v1_s74] = v0_s74[v1_s74] + 1
    return cfg

def step_73(cfg):
    v0_s73 = {}
    for v1_s73 in v2_s73:
        if v1_s73 not in v0_s73:
            v0_s73[v1_s73] = v2_s73.count(v1_s73)
    return cfg

def step_72(cfg):
    v0_s72 = {}
    for v1_s72 in v2_s72:
        if v1_s72 in v0_s72:
            v0_s72[v1_s72] += 1
        else:
            v0_s72[v1_s72] = 1
    return cfg

def step_71(cfg):
    v0_s71 = {}
    for v1_s71 in v2_s71:
        if v1_s71 in v0_s71.keys():
            v0_s71[v1_s71] += 1
        else:
            v0_s71[v1_s71] = 1
    return cfg

def step_70(cfg):
    v0_s70 = {}
    for v1_s70 in range(len(v2_s70)):
        if v2_s70[v1_s70] not in v0_s70:
            v0_s70[v2_s70[v1_s70]] = 0
        v0_s70[v2_s70[v1_s70]] += 1
    return cfg

def step_69(cfg):
    v0_s69 = {}
    for v1_s69 in v2_s69:
        if v1_s69 not in v0_s69:
            v0_s69[v1_s69] = 1
        else:
            v0_s69[v1_s69] = v0_s69[v1_s69] + 1
    return cfg

def step_68(cfg):
    v0_s68 = {}
    for v1_s68 in v2_s68:
        if v1_s68 not in v0_s68:
            v0_s68[v1_s68] = v2_s68.count(v1_s68)
    return cfg

def step_67(cfg):
    v0_s67 = {}
    for v1_s67 in v2_s67:
        if v1_s67 in v0_s67:
            v0_s67[v1_s67] += 1
        else:
            v0_s67[v1_s67] = 1
    return cfg

def step_66(cfg):
    v0_s66 = {}
    for v1_s66 in v2_s66:
        if v1_s66 in v0_s66.keys():
            v0_s66[v1_s66] += 1
        else:
            v0_s66[v1_s66] = 1
    return cfg

def step_65(cfg):
    v0_s65 = {}
    for v1_s65 in range(len(v2_s65)):
        if v2_s65[v1_s65] not in v0_s65:
            v0_s65[v2_s65[v1_s65]] = 0
        v0_s65[v2_s65[v1_s65]] += 1
    return cfg

def step_64(cfg):
    v0_s64 = {}
    for v1_s64 in v2_s64:
        if v1_s64 not in v0_s64:
            v0_s64[v1_s64] = 1
        else:
            v0_s64[v1_s64] = v0_s64[v1_s64] + 1
    return cfg

def step_63(cfg):
    v0_s63 = {}
    for v1_s63 in v2_s63:
        if v1_s63 not in v0_s63:
            v0_s63[v1_s63] = v2_s63.count(v1_s63)
    return cfg
