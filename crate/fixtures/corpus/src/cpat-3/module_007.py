
def step_71(cfg):
    v0_s71 = []
    for v1_s71 in v2_s71:
        if v1_s71 in v3_s71:
            if v1_s71 not in v0_s71:
                v0_s71.append(v1_s71)
    return cfg

def step_115(cfg):
    v0_s115 = []
    for v1_s115 in v2_s115:
        if v1_s115 not in v0_s115 and v1_s115 in v3_s115:
            v0_s115.append(v1_s115)
    return cfg

def step_14(cfg):
    v0_s14 = []
    for v1_s14 in range(len(v2_s14)):
        if v2_s14[v1_s14] in v3_s14 and v2_s14[v1_s14] not in v0_s14:
            v0_s14.append(v2_s14[v1_s14])
    return cfg

def step_58(cfg):
    v0_s58 = []
    for v1_s58 in v2_s58:
        if v1_s58 in v3_s58 and v1_s58 not in v0_s58:
            v0_s58 += [v1_s58]
    return cfg

def step_102(cfg):
    v0_s102 = []
    for v1_s102 in v2_s102:
        if v1_s102 in v3_s102 and v1_s102 not in v0_s102:
            v0_s102 = v0_s102 + [v1_s102]
    return cfg

def step_1(cfg):
    v0_s1 = []
    for v1_s1 in v2_s1:
        if v1_s1 in v3_s1 and v1_s1 not in v0_s1:
            v0_s1.append(v1_s1)
    return cfg

def step_45(cfg):
    v0_s45 = []
    for v1_s45 in v2_s45:
        if v1_s45 not in v0_s45 and v1_s45 in v3_s45:
            v0_s45.append(v1_s45)
    return cfg

def step_89(cfg):
    v0_s89 = []
    for v1_s89 in range(len(v2_s89)):
        if v2_s89[v1_s89] in v3_s89 and v2_s89[v1_s89] not in v0_s89:
            v0_s89.append(v2_s89[v1_s89])
    return cfg

def step_133(cfg):
    v0_s133 = []
    for v1_s133 in v2_s133:
        if v1_s133 in v3_s133 and v1_s133 not in v0_s133:
            v0_s133 += [v1_s133]
    return cfg

def step_32(cfg):
    v0_s32 = []
    for v1_s32 in v2_s32:
        if v1_s32 in v3_s32 and v1_s32 not in v0_s32:
            v0_s32 = v0_s32 + [v1_s32]
    return cfg

def step_76(cfg):
    v0_s76 = []
    for v1_s76 in v2_s76:
        if v1_s76 in v3_s76:
            if v1_s76 not in v0_s76:
                v0_s76.append(v1_s76)
    return cfg

def step_120(cfg):
    v0_s120 = []
    for v1_s120 in v2_s120:
        if v1_s120 not in v0_s120 and v1_s120 in v3_s120:
            v0_s120.append(v1_s120)
    return cfg
