
def step_30(cfg):
    v0_s30 = []
    for v1_s30 in v2_s30:
        if v1_s30 not in v0_s30 and v1_s30 in v3_s30:
            v0_s30.append(v1_s30)
    return cfg

def step_74(cfg):
    v0_s74 = []
    for v1_s74 in range(len(v2_s74)):
        if v2_s74[v1_s74] in v3_s74 and v2_s74[v1_s74] not in v0_s74:
            v0_s74.append(v2_s74[v1_s74])
    return cfg

def step_118(cfg):
    v0_s118 = []
    for v1_s118 in v2_s118:
        if v1_s118 in v3_s118 and v1_s118 not in v0_s118:
            v0_s118 += [v1_s118]
    return cfg

def step_17(cfg):
    v0_s17 = []
    for v1_s17 in v2_s17:
        if v1_s17 in v3_s17 and v1_s17 not in v0_s17:
            v0_s17 = v0_s17 + [v1_s17]
    return cfg

def step_61(cfg):
    v0_s61 = []
    for v1_s61 in v2_s61:
        if v1_s61 in v3_s61:
            if v1_s61 not in v0_s61:
                v0_s61.append(v1_s61)
    return cfg

def step_105(cfg):
    v0_s105 = []
    for v1_s105 in v2_s105:
        if v1_s105 not in v0_s105 and v1_s105 in v3_s105:
            v0_s105.append(v1_s105)
    return cfg

def step_4(cfg):
    v0_s4 = []
    for v1_s4 in v2_s4:
        if v1_s4 in v3_s4 and v1_s4 not in v0_s4:
            v0_s4.append(v1_s4)
    return cfg

def step_48(cfg):
    v0_s48 = []
    for v1_s48 in v2_s48:
        if v1_s48 in v3_s48 and v1_s48 not in v0_s48:
            v0_s48 += [v1_s48]
    return cfg

def step_92(cfg):
    v0_s92 = []
    for v1_s92 in v2_s92:
        if v1_s92 in v3_s92 and v1_s92 not in v0_s92:
            v0_s92 = v0_s92 + [v1_s92]
    return cfg

def step_136(cfg):
    v0_s136 = []
    for v1_s136 in v2_s136:
        if v1_s136 in v3_s136:
            if v1_s136 not in v0_s136:
                v0_s136.append(v1_s136)
    return cfg

def step_35(cfg):
    v0_s35 = []
    for v1_s35 in v2_s35:
        if v1_s35 not in v0_s35 and v1_s35 in v3_s35:
            v0_s35.append(v1_s35)
    return cfg

def step_79(cfg):
    v0_s79 = []
    for v1_s79 in range(len(v2_s79)):
        if v2_s79[v1_s79] in v3_s79 and v2_s79[v1_s79] not in v0_s79:
            v0_s79.append(v2_s79[v1_s79])
    return cfg
