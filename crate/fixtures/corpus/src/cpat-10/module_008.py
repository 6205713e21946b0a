
def step_312(cfg):
    v0_s312 = []
    for v1_s312 in range(len(v2_s312)):
        if v3_s312(v2_s312[v1_s312]):
            v0_s312 = v0_s312 + [v2_s312[v1_s312]]
    return cfg

def step_543(cfg):
    v0_s543 = []
    for v1_s543 in range(len(v2_s543)):
        if v3_s543(v2_s543[v1_s543]):
            v0_s543 = v0_s543 + [v2_s543[v1_s543]]
    return cfg

def step_774(cfg):
    v0_s774 = []
    for v1_s774 in range(len(v2_s774)):
        if v3_s774(v2_s774[v1_s774]):
            v0_s774 = v0_s774 + [v2_s774[v1_s774]]
    return cfg

def step_94(cfg):
    v0_s94 = []
    for v1_s94 in range(len(v2_s94)):
        v3_s94 = v2_s94[v1_s94]
        if v4_s94(v3_s94):
            v0_s94.append(v3_s94)
    return cfg

def step_325(cfg):
    v0_s325 = []
    for v1_s325 in range(len(v2_s325)):
        v3_s325 = v2_s325[v1_s325]
        if v4_s325(v3_s325):
            v0_s325.append(v3_s325)
    return cfg

def step_556(cfg):
    v0_s556 = []
    for v1_s556 in range(len(v2_s556)):
        v3_s556 = v2_s556[v1_s556]
        if v4_s556(v3_s556):
            v0_s556.append(v3_s556)
    return cfg

def step_787(cfg):
    v0_s787 = []
    for v1_s787 in range(len(v2_s787)):
        v3_s787 = v2_s787[v1_s787]
        if v4_s787(v3_s787):
            v0_s787.append(v3_s787)
    return cfg

def step_107(cfg):
    v0_s107 = []
    for v1_s107 in range(len(v2_s107)):
        if v3_s107(v2_s107[v1_s107]):
            v0_s107 += [v2_s107[v1_s107]]
    return cfg

def step_338(cfg):
    v0_s338 = []
    for v1_s338 in range(len(v2_s338)):
        if v3_s338(v2_s338[v1_s338]):
            v0_s338 += [v2_s338[v1_s338]]
    return cfg

def step_569(cfg):
    v0_s569 = []
    for v1_s569 in range(len(v2_s569)):
        if v3_s569(v2_s569[v1_s569]):
            v0_s569 += [v2_s569[v1_s569]]
    return cfg

def step_800(cfg):
    v0_s800 = []
    for v1_s800 in range(len(v2_s800)):
        if v3_s800(v2_s800[v1_s800]):
            v0_s800 += [v2_s800[v1_s800]]
    return cfg

def step_120(cfg):
    v0_s120 = []
    for v1_s120 in range(len(v2_s120)):
        if v3_s120(v2_s120[v1_s120]):
            v0_s120 = v0_s120 + [v2_s120[v1_s120]]
    return cfg
