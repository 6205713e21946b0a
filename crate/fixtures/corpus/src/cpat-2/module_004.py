
def step_172(cfg):
    for v0_s172 in list(v1_s172):
        v2_s172[v0_s172] = v1_s172[v0_s172]
    return cfg

def step_56(cfg):
    for v0_s56 in v1_s56:
        v2_s56[v0_s56] = v1_s56[v0_s56]
    return cfg

def step_145(cfg):
    for v0_s145, v1_s145 in v2_s145.items():
        if v0_s145 not in v3_s145 or v3_s145[v0_s145] != v1_s145:
            v3_s145[v0_s145] = v1_s145
    return cfg

def step_29(cfg):
    for v0_s29, v1_s29 in v2_s29.items():
        v3_s29[v0_s29] = v1_s29
    return cfg

def step_118(cfg):
    for v0_s118, v1_s118 in v2_s118.items():
        if v0_s118 not in v3_s118 or v3_s118[v0_s118] != v1_s118:
            v3_s118[v0_s118] = v1_s118
    return cfg

def step_2(cfg):
    for v0_s2, v1_s2 in v2_s2.items():
        v3_s2[v0_s2] = v1_s2
    return cfg

def step_91(cfg):
    v0_s91 = list(v1_s91.items())
    for v2_s91 in v0_s91:
        v3_s91[v2_s91[0]] = v2_s91[1]
    return cfg

def step_180(cfg):
    for v0_s180 in v1_s180.keys():
        v2_s180[v0_s180] = v1_s180[v0_s180]
    return cfg

def step_64(cfg):
    for v0_s64, v1_s64 in v2_s64.items():
        v3_s64.update({v0_s64: v1_s64})
    return cfg

def step_153(cfg):
    for v0_s153 in v1_s153.keys():
        v2_s153[v0_s153] = v1_s153[v0_s153]
    return cfg

def step_37(cfg):
    for v0_s37, v1_s37 in v2_s37.items():
        v3_s37[v0_s37] = v1_s37
    return cfg

def step_126(cfg):
    for v0_s126 in v1_s126:
        v2_s126[v0_s126] = v1_s126[v0_s126]
    return cfg
