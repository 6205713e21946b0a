
def step_43(cfg):
    for v0_s43, v1_s43 in v2_s43.items():
        v3_s43[v0_s43] = v1_s43
    return cfg

def step_132(cfg):
    for v0_s132 in list(v1_s132):
        v2_s132[v0_s132] = v1_s132[v0_s132]
    return cfg

def step_16(cfg):
    for v0_s16, v1_s16 in v2_s16.items():
        v3_s16[v0_s16] = v1_s16
    return cfg

def step_105(cfg):
    for v0_s105, v1_s105 in v2_s105.items():
        if v0_s105 not in v3_s105 or v3_s105[v0_s105] != v1_s105:
            v3_s105[v0_s105] = v1_s105
    return cfg

def step_194(cfg):
    for v0_s194, v1_s194 in v2_s194.items():
        v3_s194.update({v0_s194: v1_s194})
    return cfg

def step_78(cfg):
    for v0_s78, v1_s78 in v2_s78.items():
        if v0_s78 not in v3_s78 or v3_s78[v0_s78] != v1_s78:
            v3_s78[v0_s78] = v1_s78
    return cfg

def step_167(cfg):
    for v0_s167, v1_s167 in v2_s167.items():
        v3_s167.update({v0_s167: v1_s167})
    return cfg

def step_51(cfg):
    v0_s51 = list(v1_s51.items())
    for v2_s51 in v0_s51:
        v3_s51[v2_s51[0]] = v2_s51[1]
    return cfg

def step_140(cfg):
    for v0_s140 in v1_s140.keys():
        v2_s140[v0_s140] = v1_s140[v0_s140]
    return cfg

def step_24(cfg):
    for v0_s24, v1_s24 in v2_s24.items():
        v3_s24[v0_s24] = v1_s24
    return cfg

def step_113(cfg):
    for v0_s113 in v1_s113.keys():
        v2_s113[v0_s113] = v1_s113[v0_s113]
    return cfg

def step_202(cfg):
    for v0_s202, v1_s202 in v2_s202.items():
        v3_s202[v0_s202] = v1_s202
    return cfg
