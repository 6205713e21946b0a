
def step_96(cfg):
    for v0_s96 in v1_s96:
        v2_s96[v0_s96] = v1_s96[v0_s96]
    return cfg

def step_185(cfg):
    for v0_s185, v1_s185 in v2_s185.items():
        if v0_s185 not in v3_s185 or v3_s185[v0_s185] != v1_s185:
            v3_s185[v0_s185] = v1_s185
    return cfg

def step_69(cfg):
    for v0_s69 in list(v1_s69):
        v2_s69[v0_s69] = v1_s69[v0_s69]
    return cfg

def step_158(cfg):
    for v0_s158, v1_s158 in v2_s158.items():
        if v0_s158 not in v3_s158 or v3_s158[v0_s158] != v1_s158:
            v3_s158[v0_s158] = v1_s158
    return cfg

def step_42(cfg):
    for v0_s42, v1_s42 in v2_s42.items():
        v3_s42[v0_s42] = v1_s42
    return cfg

def step_131(cfg):
    v0_s131 = list(v1_s131.items())
    for v2_s131 in v0_s131:
        v3_s131[v2_s131[0]] = v2_s131[1]
    return cfg

def step_15(cfg):
    for v0_s15, v1_s15 in v2_s15.items():
        v3_s15[v0_s15] = v1_s15
    return cfg

def step_104(cfg):
    for v0_s104, v1_s104 in v2_s104.items():
        v3_s104.update({v0_s104: v1_s104})
    return cfg

def step_193(cfg):
    for v0_s193 in v1_s193.keys():
        v2_s193[v0_s193] = v1_s193[v0_s193]
    return cfg

def step_77(cfg):
    for v0_s77, v1_s77 in v2_s77.items():
        v3_s77.update({v0_s77: v1_s77})
    return cfg

def step_166(cfg):
    for v0_s166 in v1_s166:
        v2_s166[v0_s166] = v1_s166[v0_s166]
    return cfg

def step_50(cfg):
    for v0_s50, v1_s50 in v2_s50.items():
        v3_s50[v0_s50] = v1_s50
    return cfg
