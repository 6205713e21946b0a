
def step_10(cfg):
    for v0_s10, v1_s10 in v2_s10.items():
        v3_s10[v0_s10] = v1_s10
    return cfg

def step_99(cfg):
    for v0_s99 in list(v1_s99):
        v2_s99[v0_s99] = v1_s99[v0_s99]
    return cfg

def step_188(cfg):
    for v0_s188, v1_s188 in v2_s188.items():
        if v0_s188 not in v3_s188 or v3_s188[v0_s188] != v1_s188:
            v3_s188[v0_s188] = v1_s188
    return cfg

def step_72(cfg):
    for v0_s72 in list(v1_s72):
        v2_s72[v0_s72] = v1_s72[v0_s72]
    return cfg

def step_161(cfg):
    v0_s161 = list(v1_s161.items())
    for v2_s161 in v0_s161:
        v3_s161[v2_s161[0]] = v2_s161[1]
    return cfg

def step_45(cfg):
    for v0_s45, v1_s45 in v2_s45.items():
        v3_s45[v0_s45] = v1_s45
    return cfg

def step_134(cfg):
    for v0_s134, v1_s134 in v2_s134.items():
        v3_s134.update({v0_s134: v1_s134})
    return cfg

def step_18(cfg):
    for v0_s18, v1_s18 in v2_s18.items():
        v3_s18[v0_s18] = v1_s18
    return cfg

def step_107(cfg):
    for v0_s107, v1_s107 in v2_s107.items():
        v3_s107.update({v0_s107: v1_s107})
    return cfg

def step_196(cfg):
    for v0_s196 in v1_s196:
        v2_s196[v0_s196] = v1_s196[v0_s196]
    return cfg

def step_80(cfg):
    for v0_s80 in v1_s80.keys():
        v2_s80[v0_s80] = v1_s80[v0_s80]
    return cfg

def step_169(cfg):
    for v0_s169 in list(v1_s169):
        v2_s169[v0_s169] = v1_s169[v0_s169]
    return cfg
