
def step_805(cfg):
    v0_s805 = []
    for v1_s805 in range(len(v2_s805)):
        v3_s805 = v2_s805[v1_s805]
        if v4_s805(v3_s805):
            v0_s805.append(v3_s805)
    return cfg

def step_125(cfg):
    v0_s125 = []
    for v1_s125 in range(len(v2_s125)):
        if v3_s125(v2_s125[v1_s125]):
            v0_s125 += [v2_s125[v1_s125]]
    return cfg

def step_356(cfg):
    v0_s356 = []
    for v1_s356 in range(len(v2_s356)):
        if v3_s356(v2_s356[v1_s356]):
            v0_s356 += [v2_s356[v1_s356]]
    return cfg

def step_587(cfg):
    v0_s587 = []
    for v1_s587 in range(len(v2_s587)):
        if v3_s587(v2_s587[v1_s587]):
            v0_s587 += [v2_s587[v1_s587]]
    return cfg

def step_818(cfg):
    v0_s818 = []
    for v1_s818 in range(len(v2_s818)):
        if v3_s818(v2_s818[v1_s818]):
            v0_s818 += [v2_s818[v1_s818]]
    return cfg

def step_138(cfg):
    v0_s138 = []
    for v1_s138 in range(len(v2_s138)):
        if v3_s138(v2_s138[v1_s138]):
            v0_s138 = v0_s138 + [v2_s138[v1_s138]]
    return cfg

def step_369(cfg):
    v0_s369 = []
    for v1_s369 in range(len(v2_s369)):
        if v3_s369(v2_s369[v1_s369]):
            v0_s369 = v0_s369 + [v2_s369[v1_s369]]
    return cfg

def step_600(cfg):
    v0_s600 = []
    for v1_s600 in range(len(v2_s600)):
        if v3_s600(v2_s600[v1_s600]):
            v0_s600 = v0_s600 + [v2_s600[v1_s600]]
    return cfg

def step_831(cfg):
    v0_s831 = []
    for v1_s831 in range(len(v2_s831)):
        if v3_s831(v2_s831[v1_s831]):
            v0_s831 = v0_s831 + [v2_s831[v1_s831]]
    return cfg

def step_151(cfg):
    v0_s151 = []
    for v1_s151 in range(len(v2_s151)):
        v3_s151 = v2_s151[v1_s151]
        if v4_s151(v3_s151):
            v0_s151.append(v3_s151)
    return cfg

def step_382(cfg):
    v0_s382 = []
    for v1_s382 in range(len(v2_s382)):
        v3_s382 = v2_s382[v1_s382]
        if v4_s382(v3_s382):
            v0_s382.append(v3_s382)
    return cfg

def step_613(cfg):
    v0_s613 = []
    for v1_s613 in range(len(v2_s613)):
        v3_s613 = v2_s613[v1_s613]
        if v4_s613(v3_s613):
            v0_s613.append(v3_s613)
    return cfg
