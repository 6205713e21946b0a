
def step_20(cfg):
    for v0_s20, v1_s20 in v2_s20.items():
        v3_s20[v0_s20] = v1_s20
    return cfg

def step_109(cfg):
    for v0_s109 in list(v1_s109):
        v2_s109[v0_s109] = v1_s109[v0_s109]
    return cfg

def step_198(cfg):
    for v0_s198, v1_s198 in v2_s198.items():
        if v0_s198 not in v3_s198 or v3_s198[v0_s198] != v1_s198:
            v3_s198[v0_s198] = v1_s198
    return cfg

def step_82(cfg):
    for v0_s82 in list(v1_s82):
        v2_s82[v0_s82] = v1_s82[v0_s82]
    return cfg

def step_171(cfg):
    v0_s171 = list(v1_s171.items())
    for v2_s171 in v0_s171:
        v3_s171[v2_s171[0]] = v2_s171[1]
    return cfg

def step_55(cfg):
    for v0_s55, v1_s55 in v2_s55.items():
        if v0_s55 not in v3_s55 or v3_s55[v0_s55] != v1_s55:
            v3_s55[v0_s55] = v1_s55
    return cfg

def step_144(cfg):
    for v0_s144, v1_s144 in v2_s144.items():
        v3_s144.update({v0_s144: v1_s144})
    return cfg

def step_28(cfg):
    for v0_s28, v1_s28 in v2_s28.items():
        v3_s28[v0_s28] = v1_s28
    return cfg

def step_117(cfg):
    for v0_s117, v1_s117 in v2_s117.items():
        v3_s117.update({v0_s117: v1_s117})
    return cfg

def step_1(cfg):
    for v0_s1, v1_s1 in v2_s1.items():
        v3_s1[v0_s1] = v1_s1
    return cfg

def step_90(cfg):
    for v0_s90 in v1_s90.keys():
        v2_s90[v0_s90] = v1_s90[v0_s90]
    return cfg

def step_179(cfg):
    for v0_s179 in list(v1_s179):
        v2_s179[v0_s179] = v1_s179[v0_s179]
    return cfg
