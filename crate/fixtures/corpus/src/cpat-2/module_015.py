
def step_30(cfg):
    for v0_s30, v1_s30 in v2_s30.items():
        v3_s30[v0_s30] = v1_s30
    return cfg

def step_119(cfg):
    for v0_s119 in list(v1_s119):
        v2_s119[v0_s119] = v1_s119[v0_s119]
    return cfg

def step_3(cfg):
    for v0_s3, v1_s3 in v2_s3.items():
        v3_s3[v0_s3] = v1_s3
    return cfg

def step_92(cfg):
    for v0_s92 in list(v1_s92):
        v2_s92[v0_s92] = v1_s92[v0_s92]
    return cfg

def step_181(cfg):
    v0_s181 = list(v1_s181.items())
    for v2_s181 in v0_s181:
        v3_s181[v2_s181[0]] = v2_s181[1]
    return cfg

def step_65(cfg):
    for v0_s65, v1_s65 in v2_s65.items():
        if v0_s65 not in v3_s65 or v3_s65[v0_s65] != v1_s65:
            v3_s65[v0_s65] = v1_s65
    return cfg

def step_154(cfg):
    for v0_s154, v1_s154 in v2_s154.items():
        v3_s154.update({v0_s154: v1_s154})
    return cfg

def step_38(cfg):
    for v0_s38, v1_s38 in v2_s38.items():
        v3_s38[v0_s38] = v1_s38
    return cfg

def step_127(cfg):
    for v0_s127, v1_s127 in v2_s127.items():
        v3_s127.update({v0_s127: v1_s127})
    return cfg

def step_11(cfg):
    for v0_s11, v1_s11 in v2_s11.items():
        v3_s11[v0_s11] = v1_s11
    return cfg

def step_100(cfg):
    for v0_s100 in v1_s100.keys():
        v2_s100[v0_s100] = v1_s100[v0_s100]
    return cfg

def step_189(cfg):
    for v0_s189 in list(v1_s189):
        v2_s189[v0_s189] = v1_s189[v0_s189]
    return cfg
