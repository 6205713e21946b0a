
def step_63(cfg):
    for v0_s63 in v1_s63.keys():
        v2_s63[v0_s63] = v1_s63[v0_s63]
    return cfg

def step_152(cfg):
    for v0_s152 in list(v1_s152):
        v2_s152[v0_s152] = v1_s152[v0_s152]
    return cfg

def step_36(cfg):
    for v0_s36, v1_s36 in v2_s36.items():
        v3_s36[v0_s36] = v1_s36
    return cfg

def step_125(cfg):
    for v0_s125, v1_s125 in v2_s125.items():
        if v0_s125 not in v3_s125 or v3_s125[v0_s125] != v1_s125:
            v3_s125[v0_s125] = v1_s125
    return cfg

def step_9(cfg):
    for v0_s9, v1_s9 in v2_s9.items():
        v3_s9[v0_s9] = v1_s9
    return cfg

def step_98(cfg):
    for v0_s98, v1_s98 in v2_s98.items():
        if v0_s98 not in v3_s98 or v3_s98[v0_s98] != v1_s98:
            v3_s98[v0_s98] = v1_s98
    return cfg

def step_187(cfg):
    for v0_s187, v1_s187 in v2_s187.items():
        v3_s187.update({v0_s187: v1_s187})
    return cfg

def step_71(cfg):
    v0_s71 = list(v1_s71.items())
    for v2_s71 in v0_s71:
        v3_s71[v2_s71[0]] = v2_s71[1]
    return cfg

def step_160(cfg):
    for v0_s160 in v1_s160.keys():
        v2_s160[v0_s160] = v1_s160[v0_s160]
    return cfg

def step_44(cfg):
    for v0_s44, v1_s44 in v2_s44.items():
        v3_s44[v0_s44] = v1_s44
    return cfg

def step_133(cfg):
    for v0_s133 in v1_s133.keys():
        v2_s133[v0_s133] = v1_s133[v0_s133]
    return cfg

def step_17(cfg):
    for v0_s17, v1_s17 in v2_s17.items():
        v3_s17[v0_s17] = v1_s17
    return cfg
