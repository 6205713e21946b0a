
def step_8(cfg):
    v0_s8 = []
    for v1_s8 in v2_s8:
        if v1_s8 in v3_s8 and v1_s8 not in v0_s8:
            v0_s8.append(v1_s8)
    return cfg

def step_52(cfg):
    v0_s52 = []
    for v1_s52 in v2_s52:
        if v1_s52 in v3_s52 and v1_s52 not in v0_s52:
            v0_s52 = v0_s52 + [v1_s52]
    return cfg

def step_96(cfg):
    v0_s96 = []
    for v1_s96 in v2_s96:
        if v1_s96 in v3_s96:
            if v1_s96 not in v0_s96:
                v0_s96.append(v1_s96)
    return cfg

def step_140(cfg):
    v0_s140 = []
    for v1_s140 in v2_s140:
        if v1_s140 not in v0_s140 and v1_s140 in v3_s140:
            v0_s140.append(v1_s140)
    return cfg

def step_39(cfg):
    v0_s39 = []
    for v1_s39 in range(len(v2_s39)):
        if v2_s39[v1_s39] in v3_s39 and v2_s39[v1_s39] not in v0_s39:
            v0_s39.append(v2_s39[v1_s39])
    return cfg

def step_83(cfg):
    v0_s83 = []
    for v1_s83 in v2_s83:
        if v1_s83 in v3_s83 and v1_s83 not in v0_s83:
            v0_s83 += [v1_s83]
    return cfg

def step_127(cfg):
    v0_s127 = []
    for v1_s127 in v2_s127:
        if v1_s127 in v3_s127 and v1_s127 not in v0_s127:
            v0_s127 = v0_s127 + [v1_s127]
    return cfg

def step_26(cfg):
    v0_s26 = []
    for v1_s26 in v2_s26:
        if v1_s26 in v3_s26:
            if v1_s26 not in v0_s26:
                v0_s26.append(v1_s26)
    return cfg

def step_70(cfg):
    v0_s70 = []
    for v1_s70 in v2_s70:
        if v1_s70 not in v0_s70 and v1_s70 in v3_s70:
            v0_s70.append(v1_s70)
    return cfg

def step_114(cfg):
    v0_s114 = []
    for v1_s114 in range(len(v2_s114)):
        if v2_s114[v1_s114] in v3_s114 and v2_s114[v1_s114] not in v0_s114:
            v0_s114.append(v2_s114[v1_s114])
    return cfg

def step_13(cfg):
    v0_s13 = []
    for v1_s13 in v2_s13:
        if v1_s13 in v3_s13 and v1_s13 not in v0_s13:
            v0_s13 += [v1_s13]
    return cfg

def step_57(cfg):
    v0_s57 = []
    for v1_s57 in v2_s57:
        if v1_s57 in v3_s57 and v1_s57 not in v0_s57:
            v0_s57 = v0_s57 + [v1_s57]
    return cfg
