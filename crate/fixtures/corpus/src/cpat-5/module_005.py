
def step_27(cfg):
    v0_s27 = {}
    for v1_s27 in v2_s27:
        if v1_s27 in v0_s27:
            v0_s27[v1_s27] = v0_s27[v1_s27] + [v3_s27(v1_s27)]
        else:
            v0_s27[v1_s27] = [v3_s27(v1_s27)]
    return cfg

def step_107(cfg):
    v0_s107 = {}
    for v1_s107 in v2_s107:
        if v1_s107 in v0_s107:
            v0_s107[v1_s107] = v0_s107[v1_s107] + [v3_s107(v1_s107)]
        else:
            v0_s107[v1_s107] = [v3_s107(v1_s107)]
    return cfg

def step_58(cfg):
    v0_s58 = {}
    for v1_s58 in v2_s58:
        if v1_s58 in v0_s58.keys():
            v0_s58[v1_s58].append(v3_s58(v1_s58))
        else:
            v0_s58[v1_s58] = [v3_s58(v1_s58)]
    return cfg

def step_9(cfg):
    v0_s9 = {}
    for v1_s9 in v2_s9:
        v3_s9 = v4_s9(v1_s9)
        if v1_s9 in v0_s9:
            v0_s9[v1_s9].append(v3_s9)
        else:
            v0_s9[v1_s9] = [v3_s9]
    return cfg

def step_89(cfg):
    v0_s89 = {}
    for v1_s89 in v2_s89:
        v3_s89 = v4_s89(v1_s89)
        if v1_s89 in v0_s89:
            v0_s89[v1_s89].append(v3_s89)
        else:
            v0_s89[v1_s89] = [v3_s89]
    return cfg

def step_40(cfg):
    v0_s40 = {}
    for v1_s40 in range(len(v2_s40)):
        if v2_s40[v1_s40] in v0_s40:
            v0_s40[v2_s40[v1_s40]].append(v3_s40(v2_s40[v1_s40]))
        else:
            v0_s40[v2_s40[v1_s40]] = [v3_s40(v2_s40[v1_s40])]
    return cfg

def step_120(cfg):
    v0_s120 = {}
    for v1_s120 in range(len(v2_s120)):
        if v2_s120[v1_s120] in v0_s120:
            v0_s120[v2_s120[v1_s120]].append(v3_s120(v2_s120[v1_s120]))
        else:
            v0_s120[v2_s120[v1_s120]] = [v3_s120(v2_s120[v1_s120])]
    return cfg

def step_71(cfg):
    v0_s71 = {}
    for v1_s71 in v2_s71:
        if v1_s71 not in v0_s71:
            v0_s71[v1_s71] = []
        v0_s71[v1_s71].append(v3_s71(v1_s71))
    return cfg

def step_22(cfg):
    v0_s22 = {}
    for v1_s22 in v2_s22:
        if v1_s22 in v0_s22:
            v0_s22[v1_s22] = v0_s22[v1_s22] + [v3_s22(v1_s22)]
        else:
            v0_s22[v1_s22] = [v3_s22(v1_s22)]
    return cfg

def step_102(cfg):
    v0_s102 = {}
    for v1_s102 in v2_s102:
        if v1_s102 in v0_s102:
            v0_s102[v1_s102] = v0_s102[v1_s102] + [v3_s102(v1_s102)]
        else:
            v0_s102[v1_s102] = [v3_s102(v1_s102)]
    return cfg

def step_53(cfg):
    v0_s53 = {}
    for v1_s53 in v2_s53:
        if v1_s53 in v0_s53.keys():
            v0_s53[v1_s53].append(v3_s53(v1_s53))
        else:
            v0_s53[v1_s53] = [v3_s53(v1_s53)]
    return cfg

def step_4(cfg):
    v0_s4 = {}
    for v1_s4 in v2_s4:
        if v1_s4 in v0_s4:
            v0_s4[v1_s4].append(v3_s4(v1_s4))
        else:
            v0_s4[v1_s4] = [v3_s4(v1_s4)]
    return cfg
