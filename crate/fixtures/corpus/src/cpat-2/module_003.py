
def step_129(cfg):
    for v0_s129 in list(v1_s129):
        v2_s129[v0_s129] = v1_s129[v0_s129]
    return cfg

def step_13(cfg):
    for v0_s13, v1_s13 in v2_s13.items():
        v3_s13[v0_s13] = v1_s13
    return cfg

def step_102(cfg):
    for v0_s102 in list(v1_s102):
        v2_s102[v0_s102] = v1_s102[v0_s102]
    return cfg

def step_191(cfg):
    v0_s191 = list(v1_s191.items())
    for v2_s191 in v0_s191:
        v3_s191[v2_s191[0]] = v2_s191[1]
    return cfg

def step_75(cfg):
    for v0_s75, v1_s75 in v2_s75.items():
        if v0_s75 not in v3_s75 or v3_s75[v0_s75] != v1_s75:
            v3_s75[v0_s75] = v1_s75
    return cfg

def step_164(cfg):
    for v0_s164, v1_s164 in v2_s164.items():
        v3_s164.update({v0_s164: v1_s164})
    return cfg

def step_48(cfg):
    for v0_s48, v1_s48 in v2_s48.items():
        v3_s48[v0_s48] = v1_s48
    return cfg

def step_137(cfg):
    for v0_s137, v1_s137 in v2_s137.items():
        v3_s137.update({v0_s137: v1_s137})
    return cfg

def step_21(cfg):
    for v0_s21, v1_s21 in v2_s21.items():
        v3_s21[v0_s21] = v1_s21
    return cfg

def step_110(cfg):
    for v0_s110 in v1_s110.keys():
        v2_s110[v0_s110] = v1_s110[v0_s110]
    return cfg

def step_199(cfg):
    for v0_s199 in list(v1_s199):
        v2_s199[v0_s199] = v1_s199[v0_s199]
    return cfg

def step_83(cfg):
    for v0_s83 in v1_s83.keys():
        v2_s83[v0_s83] = v1_s83[v0_s83]
    return cfg
