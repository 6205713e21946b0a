
def step_106(cfg):
    for v0_s106 in v1_s106:
        v2_s106[v0_s106] = v1_s106[v0_s106]
    return cfg

def step_195(cfg):
    for v0_s195, v1_s195 in v2_s195.items():
        if v0_s195 not in v3_s195 or v3_s195[v0_s195] != v1_s195:
            v3_s195[v0_s195] = v1_s195
    return cfg

def step_79(cfg):
    for v0_s79 in list(v1_s79):
        v2_s79[v0_s79] = v1_s79[v0_s79]
    return cfg

def step_168(cfg):
    for v0_s168, v1_s168 in v2_s168.items():
        if v0_s168 not in v3_s168 or v3_s168[v0_s168] != v1_s168:
            v3_s168[v0_s168] = v1_s168
    return cfg

def step_52(cfg):
    for v0_s52 in list(v1_s52):
        v2_s52[v0_s52] = v1_s52[v0_s52]
    return cfg

def step_141(cfg):
    v0_s141 = list(v1_s141.items())
    for v2_s141 in v0_s141:
        v3_s141[v2_s141[0]] = v2_s141[1]
    return cfg

def step_25(cfg):
    for v0_s25, v1_s25 in v2_s25.items():
        v3_s25[v0_s25] = v1_s25
    return cfg

def step_114(cfg):
    for v0_s114, v1_s114 in v2_s114.items():
        v3_s114.update({v0_s114: v1_s114})
    return cfg

def step_203(cfg):
    for v0_s203, v1_s203 in v2_s203.items():
        v3_s203[v0_s203] = v1_s203
    return cfg

def step_87(cfg):
    for v0_s87, v1_s87 in v2_s87.items():
        v3_s87.update({v0_s87: v1_s87})
    return cfg

def step_176(cfg):
    for v0_s176 in v1_s176:
        v2_s176[v0_s176] = v1_s176[v0_s176]
    return cfg

def step_60(cfg):
    for v0_s60 in v1_s60.keys():
        v2_s60[v0_s60] = v1_s60[v0_s60]
    return cfg
