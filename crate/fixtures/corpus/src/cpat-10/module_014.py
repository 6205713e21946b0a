
def step_546(cfg):
    v0_s546 = []
    for v1_s546 in range(len(v2_s546)):
        if v3_s546(v2_s546[v1_s546]):
            v0_s546 = v0_s546 + [v2_s546[v1_s546]]
    return cfg

def step_777(cfg):
    v0_s777 = []
    for v1_s777 in range(len(v2_s777)):
        if v3_s777(v2_s777[v1_s777]):
            v0_s777 = v0_s777 + [v2_s777[v1_s777]]
    return cfg

def step_97(cfg):
    v0_s97 = []
    for v1_s97 in range(len(v2_s97)):
        v3_s97 = v2_s97[v1_s97]
        if v4_s97(v3_s97):
            v0_s97.append(v3_s97)
    return cfg

def step_328(cfg):
    v0_s328 = []
    for v1_s328 in range(len(v2_s328)):
        v3_s328 = v2_s328[v1_s328]
        if v4_s328(v3_s328):
            v0_s328.append(v3_s328)
    return cfg

def step_559(cfg):
    v0_s559 = []
    for v1_s559 in range(len(v2_s559)):
        v3_s559 = v2_s559[v1_s559]
        if v4_s559(v3_s559):
            v0_s559.append(v3_s559)
    return cfg

def step_790(cfg):
    v0_s790 = []
    for v1_s790 in range(len(v2_s790)):
        v3_s790 = v2_s790[v1_s790]
        if v4_s790(v3_s790):
            v0_s790.append(v3_s790)
    return cfg

def step_110(cfg):
    v0_s110 = []
    for v1_s110 in range(len(v2_s110)):
        if v3_s110(v2_s110[v1_s110]):
            v0_s110 += [v2_s110[v1_s110]]
    return cfg

def step_341(cfg):
    v0_s341 = []
    for v1_s341 in range(len(v2_s341)):
        if v3_s341(v2_s341[v1_s341]):
            v0_s341 += [v2_s341[v1_s341]]
    return cfg

def step_572(cfg):
    v0_s572 = []
    for v1_s572 in range(len(v2_s572)):
        if v3_s572(v2_s572[v1_s572]):
            v0_s572 += [v2_s572[v1_s572]]
    return cfg

def step_803(cfg):
    v0_s803 = []
    for v1_s803 in range(len(v2_s803)):
        if v3_s803(v2_s803[v1_s803]):
            v0_s803 += [v2_s803[v1_s803]]
    return cfg

def step_123(cfg):
    v0_s123 = []
    for v1_s123 in range(len(v2_s123)):
        if v3_s123(v2_s123[v1_s123]):
            v0_s123 = v0_s123 + [v2_s123[v1_s123]]
    return cfg

def step_354(cfg):
    v0_s354 = []
    for v1_s354 in range(len(v2_s354)):
        if v3_s354(v2_s354[v1_s354]):
            v0_s354 = v0_s354 + [v2_s354[v1_s354]]
    return cfg
