
def step_149(cfg):
    for v0_s149 in list(v1_s149):
        v2_s149[v0_s149] = v1_s149[v0_s149]
    return cfg

def step_33(cfg):
    for v0_s33, v1_s33 in v2_s33.items():
        v3_s33[v0_s33] = v1_s33
    return cfg

def step_122(cfg):
    for v0_s122 in list(v1_s122):
        v2_s122[v0_s122] = v1_s122[v0_s122]
    return cfg

def step_6(cfg):
    for v0_s6, v1_s6 in v2_s6.items():
        v3_s6[v0_s6] = v1_s6
    return cfg

def step_95(cfg):
    for v0_s95, v1_s95 in v2_s95.items():
        if v0_s95 not in v3_s95 or v3_s95[v0_s95] != v1_s95:
            v3_s95[v0_s95] = v1_s95
    return cfg

def step_184(cfg):
    for v0_s184, v1_s184 in v2_s184.items():
        v3_s184.update({v0_s184: v1_s184})
    return cfg

def step_68(cfg):
    for v0_s68, v1_s68 in v2_s68.items():
        if v0_s68 not in v3_s68 or v3_s68[v0_s68] != v1_s68:
            v3_s68[v0_s68] = v1_s68
    return cfg

def step_157(cfg):
    for v0_s157, v1_s157 in v2_s157.items():
        v3_s157.update({v0_s157: v1_s157})
    return cfg

def step_41(cfg):
    for v0_s41, v1_s41 in v2_s41.items():
        v3_s41[v0_s41] = v1_s41
    return cfg

def step_130(cfg):
    for v0_s130 in v1_s130.keys():
        v2_s130[v0_s130] = v1_s130[v0_s130]
    return cfg

def step_14(cfg):
    for v0_s14, v1_s14 in v2_s14.items():
        v3_s14[v0_s14] = v1_s14
    return cfg

def step_103(cfg):
    for v0_s103 in v1_s103.keys():
        v2_s103[v0_s103] = v1_s103[v0_s103]
    return cfg
