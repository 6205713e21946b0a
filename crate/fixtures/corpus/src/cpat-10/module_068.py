
def step_830(cfg):
    v0_s830 = []
    for v1_s830 in range(len(v2_s830)):
        if v3_s830(v2_s830[v1_s830]):
            v0_s830 += [v2_s830[v1_s830]]
    return cfg

def step_150(cfg):
    v0_s150 = []
    for v1_s150 in range(len(v2_s150)):
        if v3_s150(v2_s150[v1_s150]):
            v0_s150 = v0_s150 + [v2_s150[v1_s150]]
    return cfg

def step_381(cfg):
    v0_s381 = []
    for v1_s381 in range(len(v2_s381)):
        if v3_s381(v2_s381[v1_s381]):
            v0_s381 = v0_s381 + [v2_s381[v1_s381]]
    return cfg

def step_612(cfg):
    v0_s612 = []
    for v1_s612 in range(len(v2_s612)):
        if v3_s612(v2_s612[v1_s612]):
            v0_s612 = v0_s612 + [v2_s612[v1_s612]]
    return cfg

def step_843(cfg):
    v0_s843 = []
    for v1_s843 in range(len(v2_s843)):
        if v3_s843(v2_s843[v1_s843]):
            v0_s843 = v0_s843 + [v2_s843[v1_s843]]
    return cfg

def step_163(cfg):
    v0_s163 = []
    for v1_s163 in range(len(v2_s163)):
        v3_s163 = v2_s163[v1_s163]
        if v4_s163(v3_s163):
            v0_s163.append(v3_s163)
    return cfg

def step_394(cfg):
    v0_s394 = []
    for v1_s394 in range(len(v2_s394)):
        v3_s394 = v2_s394[v1_s394]
        if v4_s394(v3_s394):
            v0_s394.append(v3_s394)
    return cfg

def step_625(cfg):
    v0_s625 = []
    for v1_s625 in range(len(v2_s625)):
        v3_s625 = v2_s625[v1_s625]
        if v4_s625(v3_s625):
            v0_s625.append(v3_s625)
    return cfg

def step_856(cfg):
    v0_s856 = []
    for v1_s856 in range(len(v2_s856)):
        v3_s856 = v2_s856[v1_s856]
        if v4_s856(v3_s856):
            v0_s856.append(v3_s856)
    return cfg

def step_176(cfg):
    v0_s176 = []
    for v1_s176 in range(len(v2_s176)):
        if v3_s176(v2_s176[v1_s176]):
            v0_s176 += [v2_s176[v1_s176]]
    return cfg

def step_407(cfg):
    v0_s407 = []
    for v1_s407 in range(len(v2_s407)):
        if v3_s407(v2_s407[v1_s407]):
            v0_s407 += [v2_s407[v1_s407]]
    return cfg

def step_638(cfg):
    v0_s638 = []
    for v1_s638 in range(len(v2_s638)):
        if v3_s638(v2_s638[v1_s638]):
            v0_s638 += [v2_s638[v1_s638]]
    return cfg
