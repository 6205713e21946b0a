
def step_702(cfg):
    v0_s702 = []
    for v1_s702 in range(len(v2_s702)):
        if v3_s702(v2_s702[v1_s702]):
            v0_s702 = v0_s702 + [v2_s702[v1_s702]]
    return cfg

def step_22(cfg):
    v0_s22 = []
    for v1_s22 in range(len(v2_s22)):
        if v3_s22(v2_s22[v1_s22]):
            v0_s22.append(v2_s22[v1_s22])
    return cfg

def step_253(cfg):
    v0_s253 = []
    for v1_s253 in range(len(v2_s253)):
        v3_s253 = v2_s253[v1_s253]
        if v4_s253(v3_s253):
            v0_s253.append(v3_s253)
    return cfg

def step_484(cfg):
    v0_s484 = []
    for v1_s484 in range(len(v2_s484)):
        v3_s484 = v2_s484[v1_s484]
        if v4_s484(v3_s484):
            v0_s484.append(v3_s484)
    return cfg

def step_715(cfg):
    v0_s715 = []
    for v1_s715 in range(len(v2_s715)):
        v3_s715 = v2_s715[v1_s715]
        if v4_s715(v3_s715):
            v0_s715.append(v3_s715)
    return cfg

def step_35(cfg):
    v0_s35 = []
    for v1_s35 in range(len(v2_s35)):
        if v3_s35(v2_s35[v1_s35]):
            v0_s35 += [v2_s35[v1_s35]]
    return cfg

def step_266(cfg):
    v0_s266 = []
    for v1_s266 in range(len(v2_s266)):
        if v3_s266(v2_s266[v1_s266]):
            v0_s266 += [v2_s266[v1_s266]]
    return cfg

def step_497(cfg):
    v0_s497 = []
    for v1_s497 in range(len(v2_s497)):
        if v3_s497(v2_s497[v1_s497]):
            v0_s497 += [v2_s497[v1_s497]]
    return cfg

def step_728(cfg):
    v0_s728 = []
    for v1_s728 in range(len(v2_s728)):
        if v3_s728(v2_s728[v1_s728]):
            v0_s728 += [v2_s728[v1_s728]]
    return cfg

def step_48(cfg):
    v0_s48 = []
    for v1_s48 in range(len(v2_s48)):
        if v3_s48(v2_s48[v1_s48]):
            v0_s48 = v0_s48 + [v2_s48[v1_s48]]
    return cfg

def step_279(cfg):
    v0_s279 = []
    for v1_s279 in range(len(v2_s279)):
        if v3_s279(v2_s279[v1_s279]):
            v0_s279 = v0_s279 + [v2_s279[v1_s279]]
    return cfg

def step_510(cfg):
    v0_s510 = []
    for v1_s510 in range(len(v2_s510)):
        if v3_s510(v2_s510[v1_s510]):
            v0_s510 = v0_s510 + [v2_s510[v1_s510]]
    return cfg
