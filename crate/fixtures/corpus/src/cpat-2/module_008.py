
def step_139(cfg):
    for v0_s139 in list(v1_s139):
        v2_s139[v0_s139] = v1_s139[v0_s139]
    return cfg

def step_23(cfg):
    for v0_s23, v1_s23 in v2_s23.items():
        v3_s23[v0_s23] = v1_s23
    return cfg

def step_112(cfg):
    for v0_s112 in list(v1_s112):
        v2_s112[v0_s112] = v1_s112[v0_s112]
    return cfg

def step_201(cfg):
    for v0_s201, v1_s201 in v2_s201.items():
        v3_s201[v0_s201] = v1_s201
    return cfg

def step_85(cfg):
    for v0_s85, v1_s85 in v2_s85.items():
        if v0_s85 not in v3_s85 or v3_s85[v0_s85] != v1_s85:
            v3_s85[v0_s85] = v1_s85
    return cfg

def step_174(cfg):
    for v0_s174, v1_s174 in v2_s174.items():
        v3_s174.update({v0_s174: v1_s174})
    return cfg

def step_58(cfg):
    for v0_s58, v1_s58 in v2_s58.items():
        if v0_s58 not in v3_s58 or v3_s58[v0_s58] != v1_s58:
            v3_s58[v0_s58] = v1_s58
    return cfg

def step_147(cfg):
    for v0_s147, v1_s147 in v2_s147.items():
        v3_s147.update({v0_s147: v1_s147})
    return cfg

def step_31(cfg):
    for v0_s31, v1_s31 in v2_s31.items():
        v3_s31[v0_s31] = v1_s31
    return cfg

def step_120(cfg):
    for v0_s120 in v1_s120.keys():
        v2_s120[v0_s120] = v1_s120[v0_s120]
    return cfg

def step_4(cfg):
    for v0_s4, v1_s4 in v2_s4.items():
        v3_s4[v0_s4] = v1_s4
    return cfg

def step_93(cfg):
    for v0_s93 in v1_s93.keys():
        v2_s93[v0_s93] = v1_s93[v0_s93]
    return cfg
