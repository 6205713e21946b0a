
def step_182(cfg):
    for v0_s182 in list(v1_s182):
        v2_s182[v0_s182] = v1_s182[v0_s182]
    return cfg

def step_66(cfg):
    for v0_s66 in v1_s66:
        v2_s66[v0_s66] = v1_s66[v0_s66]
    return cfg

def step_155(cfg):
    for v0_s155, v1_s155 in v2_s155.items():
        if v0_s155 not in v3_s155 or v3_s155[v0_s155] != v1_s155:
            v3_s155[v0_s155] = v1_s155
    return cfg

def step_39(cfg):
    for v0_s39, v1_s39 in v2_s39.items():
        v3_s39[v0_s39] = v1_s39
    return cfg

def step_128(cfg):
    for v0_s128, v1_s128 in v2_s128.items():
        if v0_s128 not in v3_s128 or v3_s128[v0_s128] != v1_s128:
            v3_s128[v0_s128] = v1_s128
    return cfg

def step_12(cfg):
    for v0_s12, v1_s12 in v2_s12.items():
        v3_s12[v0_s12] = v1_s12
    return cfg

def step_101(cfg):
    v0_s101 = list(v1_s101.items())
    for v2_s101 in v0_s101:
        v3_s101[v2_s101[0]] = v2_s101[1]
    return cfg

def step_190(cfg):
    for v0_s190 in v1_s190.keys():
        v2_s190[v0_s190] = v1_s190[v0_s190]
    return cfg

def step_74(cfg):
    for v0_s74, v1_s74 in v2_s74.items():
        v3_s74.update({v0_s74: v1_s74})
    return cfg

def step_163(cfg):
    for v0_s163 in v1_s163.keys():
        v2_s163[v0_s163] = v1_s163[v0_s163]
    return cfg

def step_47(cfg):
    for v0_s47, v1_s47 in v2_s47.items():
        v3_s47[v0_s47] = v1_s47
    return cfg

def step_136(cfg):
    for v0_s136 in v1_s136:
        v2_s136[v0_s136] = v1_s136[v0_s136]
    return cfg
