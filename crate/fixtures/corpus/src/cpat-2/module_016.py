
def step_73(cfg):
    for v0_s73 in v1_s73.keys():
        v2_s73[v0_s73] = v1_s73[v0_s73]
    return cfg

def step_162(cfg):
    for v0_s162 in list(v1_s162):
        v2_s162[v0_s162] = v1_s162[v0_s162]
    return cfg

def step_46(cfg):
    for v0_s46, v1_s46 in v2_s46.items():
        v3_s46[v0_s46] = v1_s46
    return cfg

def step_135(cfg):
    for v0_s135, v1_s135 in v2_s135.items():
        if v0_s135 not in v3_s135 or v3_s135[v0_s135] != v1_s135:
            v3_s135[v0_s135] = v1_s135
    return cfg

def step_19(cfg):
    for v0_s19, v1_s19 in v2_s19.items():
        v3_s19[v0_s19] = v1_s19
    return cfg

def step_108(cfg):
    for v0_s108, v1_s108 in v2_s108.items():
        if v0_s108 not in v3_s108 or v3_s108[v0_s108] != v1_s108:
            v3_s108[v0_s108] = v1_s108
    return cfg

def step_197(cfg):
    for v0_s197, v1_s197 in v2_s197.items():
        v3_s197.update({v0_s197: v1_s197})
    return cfg

def step_81(cfg):
    v0_s81 = list(v1_s81.items())
    for v2_s81 in v0_s81:
        v3_s81[v2_s81[0]] = v2_s81[1]
    return cfg

def step_170(cfg):
    for v0_s170 in v1_s170.keys():
        v2_s170[v0_s170] = v1_s170[v0_s170]
    return cfg

def step_54(cfg):
    for v0_s54, v1_s54 in v2_s54.items():
        v3_s54.update({v0_s54: v1_s54})
    return cfg

def step_143(cfg):
    for v0_s143 in v1_s143.keys():
        v2_s143[v0_s143] = v1_s143[v0_s143]
    return cfg

def step_27(cfg):
    for v0_s27, v1_s27 in v2_s27.items():
        v3_s27[v0_s27] = v1_s27
    return cfg
