
def step_0(cfg):
    v0_s0 = []
    for v1_s0 in v2_s0:
        if v1_s0 in v3_s0 and v1_s0 not in v0_s0:
            v0_s0.append(v1_s0)
    return cfg

def step_44(cfg):
    v0_s44 = []
    for v1_s44 in range(len(v2_s44)):
        if v2_s44[v1_s44] in v3_s44 and v2_s44[v1_s44] not in v0_s44:
            v0_s44.append(v2_s44[v1_s44])
    return cfg

def step_88(cfg):
    v0_s88 = []
    for v1_s88 in v2_s88:
        if v1_s88 in v3_s88 and v1_s88 not in v0_s88:
            v0_s88 += [v1_s88]
    return cfg

def step_132(cfg):
    v0_s132 = []
    for v1_s132 in v2_s132:
        if v1_s132 in v3_s132 and v1_s132 not in v0_s132:
            v0_s132 = v0_s132 + [v1_s132]
    return cfg

def step_31(cfg):
    v0_s31 = []
    for v1_s31 in v2_s31:
        if v1_s31 in v3_s31:
            if v1_s31 not in v0_s31:
                v0_s31.append(v1_s31)
    return cfg

def step_75(cfg):
    v0_s75 = []
    for v1_s75 in v2_s75:
        if v1_s75 not in v0_s75 and v1_s75 in v3_s75:
            v0_s75.append(v1_s75)
    return cfg

def step_119(cfg):
    v0_s119 = []
    for v1_s119 in range(len(v2_s119)):
        if v2_s119[v1_s119] in v3_s119 and v2_s119[v1_s119] not in v0_s119:
            v0_s119.append(v2_s119[v1_s119])
    return cfg

def step_18(cfg):
    v0_s18 = []
    for v1_s18 in v2_s18:
        if v1_s18 in v3_s18 and v1_s18 not in v0_s18:
            v0_s18 += [v1_s18]
    return cfg

def step_62(cfg):
    v0_s62 = []
    for v1_s62 in v2_s62:
        if v1_s62 in v3_s62 and v1_s62 not in v0_s62:
            v0_s62 = v0_s62 + [v1_s62]
    return cfg

def step_106(cfg):
    v0_s106 = []
    for v1_s106 in v2_s106:
        if v1_s106 in v3_s106:
            if v1_s106 not in v0_s106:
                v0_s106.append(v1_s106)
    return cfg

def step_5(cfg):
    v0_s5 = []
    for v1_s5 in v2_s5:
        if v1_s5 in v3_s5 and v1_s5 not in v0_s5:
            v0_s5.append(v1_s5)
    return cfg

def step_49(cfg):
    v0_s49 = []
    for v1_s49 in range(len(v2_s49)):
        if v2_s49[v1_s49] in v3_s49 and v2_s49[v1_s49] not in v0_s49:
            v0_s49.append(v2_s49[v1_s49])
    return cfg
