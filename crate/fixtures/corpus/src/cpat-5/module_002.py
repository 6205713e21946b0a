
def step_114(cfg):
    v0_s114 = {}
    for v1_s114 in v2_s114:
        v3_s114 = v4_s114(v1_s114)
        if v1_s114 in v0_s114:
            v0_s114[v1_s114].append(v3_s114)
        else:
            v0_s114[v1_s114] = [v3_s114]
    return cfg

def step_65(cfg):
    v0_s65 = {}
    for v1_s65 in range(len(v2_s65)):
        if v2_s65[v1_s65] in v0_s65:
            v0_s65[v2_s65[v1_s65]].append(v3_s65(v2_s65[v1_s65]))
        else:
            v0_s65[v2_s65[v1_s65]] = [v3_s65(v2_s65[v1_s65])]
    return cfg

def step_16(cfg):
    v0_s16 = {}
    for v1_s16 in v2_s16:
        if v1_s16 not in v0_s16:
            v0_s16[v1_s16] = []
        v0_s16[v1_s16].append(v3_s16(v1_s16))
    return cfg

def step_96(cfg):
    v0_s96 = {}
    for v1_s96 in v2_s96:
        if v1_s96 not in v0_s96:
            v0_s96[v1_s96] = []
        v0_s96[v1_s96].append(v3_s96(v1_s96))
    return cfg

def step_47(cfg):
    v0_s47 = {}
    for v1_s47 in v2_s47:
        if v1_s47 in v0_s47:
            v0_s47[v1_s47] = v0_s47[v1_s47] + [v3_s47(v1_s47)]
        else:
            v0_s47[v1_s47] = [v3_s47(v1_s47)]
    return cfg

def step_127(cfg):
    v0_s127 = {}
    for v1_s127 in v2_s127:
        if v1_s127 in v0_s127:
            v0_s127[v1_s127].append(v3_s127(v1_s127))
        else:
            v0_s127[v1_s127] = [v3_s127(v1_s127)]
    return cfg

def step_78(cfg):
    v0_s78 = {}
    for v1_s78 in v2_s78:
        if v1_s78 in v0_s78.keys():
            v0_s78[v1_s78].append(v3_s78(v1_s78))
        else:
            v0_s78[v1_s78] = [v3_s78(v1_s78)]
    return cfg

def step_29(cfg):
    v0_s29 = {}
    for v1_s29 in v2_s29:
        v3_s29 = v4_s29(v1_s29)
        if v1_s29 in v0_s29:
            v0_s29[v1_s29].append(v3_s29)
        else:
            v0_s29[v1_s29] = [v3_s29]
    return cfg

def step_109(cfg):
    v0_s109 = {}
    for v1_s109 in v2_s109:
        v3_s109 = v4_s109(v1_s109)
        if v1_s109 in v0_s109:
            v0_s109[v1_s109].append(v3_s109)
        else:
            v0_s109[v1_s109] = [v3_s109]
    return cfg

def step_60(cfg):
    v0_s60 = {}
    for v1_s60 in range(len(v2_s60)):
        if v2_s60[v1_s60] in v0_s60:
            v0_s60[v2_s60[v1_s60]].append(v3_s60(v2_s60[v1_s60]))
        else:
            v0_s60[v2_s60[v1_s60]] = [v3_s60(v2_s60[v1_s60])]
    return cfg

def step_11(cfg):
    v0_s11 = {}
    for v1_s11 in v2_s11:
        if v1_s11 not in v0_s11:
            v0_s11[v1_s11] = []
        v0_s11[v1_s11].append(v3_s11(v1_s11))
    return cfg

def step_91(cfg):
    v0_s91 = {}
    for v1_s91 in v2_s91:
        if v1_s91 not in v0_s91:
            v0_s91[v1_s91] = []
        v0_s91[v1_s91].append(v3_s91(v1_s91))
    return cfg
