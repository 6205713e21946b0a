
def step_86(cfg):
    for v0_s86 in v1_s86:
        v2_s86[v0_s86] = v1_s86[v0_s86]
    return cfg

def step_175(cfg):
    for v0_s175, v1_s175 in v2_s175.items():
        if v0_s175 not in v3_s175 or v3_s175[v0_s175] != v1_s175:
            v3_s175[v0_s175] = v1_s175
    return cfg

def step_59(cfg):
    for v0_s59 in list(v1_s59):
        v2_s59[v0_s59] = v1_s59[v0_s59]
    return cfg

def step_148(cfg):
    for v0_s148, v1_s148 in v2_s148.items():
        if v0_s148 not in v3_s148 or v3_s148[v0_s148] != v1_s148:
            v3_s148[v0_s148] = v1_s148
    return cfg

def step_32(cfg):
    for v0_s32, v1_s32 in v2_s32.items():
        v3_s32[v0_s32] = v1_s32
    return cfg

def step_121(cfg):
    v0_s121 = list(v1_s121.items())
    for v2_s121 in v0_s121:
        v3_s121[v2_s121[0]] = v2_s121[1]
    return cfg

def step_5(cfg):
    for v0_s5, v1_s5 in v2_s5.items():
        v3_s5[v0_s5] = v1_s5
    return cfg

def step_94(cfg):
    for v0_s94, v1_s94 in v2_s94.items():
        v3_s94.update({v0_s94: v1_s94})
    return cfg

def step_183(cfg):
    for v0_s183 in v1_s183.keys():
        v2_s183[v0_s183] = v1_s183[v0_s183]
    return cfg

def step_67(cfg):
    for v0_s67, v1_s67 in v2_s67.items():
        v3_s67.update({v0_s67: v1_s67})
    return cfg

def step_156(cfg):
    for v0_s156 in v1_s156:
        v2_s156[v0_s156] = v1_s156[v0_s156]
    return cfg

def step_40(cfg):
    for v0_s40, v1_s40 in v2_s40.items():
        v3_s40[v0_s40] = v1_s40
    return cfg
