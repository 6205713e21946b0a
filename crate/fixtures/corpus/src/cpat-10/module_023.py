
def step_897(cfg):
    v0_s897 = []
    for v1_s897 in range(len(v2_s897)):
        if v3_s897(v2_s897[v1_s897]):
            v0_s897 = v0_s897 + [v2_s897[v1_s897]]
    return cfg

def step_217(cfg):
    v0_s217 = []
    for v1_s217 in range(len(v2_s217)):
        v3_s217 = v2_s217[v1_s217]
        if v4_s217(v3_s217):
            v0_s217.append(v3_s217)
    return cfg

def step_448(cfg):
    v0_s448 = []
    for v1_s448 in range(len(v2_s448)):
        v3_s448 = v2_s448[v1_s448]
        if v4_s448(v3_s448):
            v0_s448.append(v3_s448)
    return cfg

def step_679(cfg):
    v0_s679 = []
    for v1_s679 in range(len(v2_s679)):
        v3_s679 = v2_s679[v1_s679]
        if v4_s679(v3_s679):
            v0_s679.append(v3_s679)
    return cfg

def step_910(cfg):
    v0_s910 = []
    for v1_s910 in range(len(v2_s910)):
        if v3_s910(v2_s910[v1_s910]):
            v0_s910.append(v2_s910[v1_s910])
    return cfg

def step_230(cfg):
    v0_s230 = []
    for v1_s230 in range(len(v2_s230)):
        if v3_s230(v2_s230[v1_s230]):
            v0_s230 += [v2_s230[v1_s230]]
    return cfg

def step_461(cfg):
    v0_s461 = []
    for v1_s461 in range(len(v2_s461)):
        if v3_s461(v2_s461[v1_s461]):
            v0_s461 += [v2_s461[v1_s461]]
    return cfg

def step_692(cfg):
    v0_s692 = []
    for v1_s692 in range(len(v2_s692)):
        if v3_s692(v2_s692[v1_s692]):
            v0_s692 += [v2_s692[v1_s692]]
    return cfg

def step_12(cfg):
    v0_s12 = []
    for v1_s12 in range(len(v2_s12)):
        if v3_s12(v2_s12[v1_s12]):
            v0_s12.append(v2_s12[v1_s12])
    return cfg

def step_243(cfg):
    v0_s243 = []
    for v1_s243 in range(len(v2_s243)):
        if v3_s243(v2_s243[v1_s243]):
            v0_s243 = v0_s243 + [v2_s243[v1_s243]]
    return cfg

def step_474(cfg):
    v0_s474 = []
    for v1_s474 in range(len(v2_s474)):
        if v3_s474(v2_s474[v1_s474]):
            v0_s474 = v0_s474 + [v2_s474[v1_s474]]
    return cfg

def step_705(cfg):
    v0_s705 = []
    for v1_s705 in range(len(v2_s705)):
        if v3_s705(v2_s705[v1_s705]):
            v0_s705 = v0_s705 + [v2_s705[v1_s705]]
    return cfg
