
def step_112(cfg):
    v0_s112 = []
    for v1_s112 in v2_s112:
        if v1_s112 in v3_s112 and v1_s112 not in v0_s112:
            v0_s112 = v0_s112 + [v1_s112]
    return cfg

def step_11(cfg):
    v0_s11 = []
    for v1_s11 in v2_s11:
        if v1_s11 in v3_s11:
            if v1_s11 not in v0_s11:
                v0_s11.append(v1_s11)
    return cfg

def step_55(cfg):
    v0_s55 = []
    for v1_s55 in v2_s55:
        if v1_s55 not in v0_s55 and v1_s55 in v3_s55:
            v0_s55.append(v1_s55)
    return cfg

def step_99(cfg):
    v0_s99 = []
    for v1_s99 in range(len(v2_s99)):
        if v2_s99[v1_s99] in v3_s99 and v2_s99[v1_s99] not in v0_s99:
            v0_s99.append(v2_s99[v1_s99])
    return cfg

def step_143(cfg):
    v0_s143 = []
    for v1_s143 in v2_s143:
        if v1_s143 in v3_s143 and v1_s143 not in v0_s143:
            v0_s143.append(v1_s143)
    return cfg

def step_42(cfg):
    v0_s42 = []
    for v1_s42 in v2_s42:
        if v1_s42 in v3_s42 and v1_s42 not in v0_s42:
            v0_s42 = v0_s42 + [v1_s42]
    return cfg

def step_86(cfg):
    v0_s86 = []
    for v1_s86 in v2_s86:
        if v1_s86 in v3_s86:
            if v1_s86 not in v0_s86:
                v0_s86.append(v1_s86)
    return cfg

def step_130(cfg):
    v0_s130 = []
    for v1_s130 in v2_s130:
        if v1_s130 not in v0_s130 and v1_s130 in v3_s130:
            v0_s130.append(v1_s130)
    return cfg

def step_29(cfg):
    v0_s29 = []
    for v1_s29 in range(len(v2_s29)):
        if v2_s29[v1_s29] in v3_s29 and v2_s29[v1_s29] not in v0_s29:
            v0_s29.append(v2_s29[v1_s29])
    return cfg

def step_73(cfg):
    v0_s73 = []
    for v1_s73 in v2_s73:
        if v1_s73 in v3_s73 and v1_s73 not in v0_s73:
            v0_s73 += [v1_s73]
    return cfg

def step_117(cfg):
    v0_s117 = []
    for v1_s117 in v2_s117:
        if v1_s117 in v3_s117 and v1_s117 not in v0_s117:
            v0_s117 = v0_s117 + [v1_s117]
    return cfg

def step_16(cfg):
    v0_s16 = []
    for v1_s16 in v2_s16:
        if v1_s16 in v3_s16:
            if v1_s16 not in v0_s16:
                v0_s16.append(v1_s16)
    return cfg
