
def step_337(cfg):
    v0_s337 = []
    for v1_s337 in range(len(v2_s337)):
        v3_s337 = v2_s337[v1_s337]
        if v4_s337(v3_s337):
            v0_s337.append(v3_s337)
    return cfg

def step_568(cfg):
    v0_s568 = []
    for v1_s568 in range(len(v2_s568)):
        v3_s568 = v2_s568[v1_s568]
        if v4_s568(v3_s568):
            v0_s568.append(v3_s568)
    return cfg

def step_799(cfg):
    v0_s799 = []
    for v1_s799 in range(len(v2_s799)):
        v3_s799 = v2_s799[v1_s799]
        if v4_s799(v3_s799):
            v0_s799.append(v3_s799)
    return cfg

def step_119(cfg):
    v0_s119 = []
    for v1_s119 in range(len(v2_s119)):
        if v3_s119(v2_s119[v1_s119]):
            v0_s119 += [v2_s119[v1_s119]]
    return cfg

def step_350(cfg):
    v0_s350 = []
    for v1_s350 in range(len(v2_s350)):
        if v3_s350(v2_s350[v1_s350]):
            v0_s350 += [v2_s350[v1_s350]]
    return cfg

def step_581(cfg):
    v0_s581 = []
    for v1_s581 in range(len(v2_s581)):
        if v3_s581(v2_s581[v1_s581]):
            v0_s581 += [v2_s581[v1_s581]]
    return cfg

def step_812(cfg):
    v0_s812 = []
    for v1_s812 in range(len(v2_s812)):
        if v3_s812(v2_s812[v1_s812]):
            v0_s812 += [v2_s812[v1_s812]]
    return cfg

def step_132(cfg):
    v0_s132 = []
    for v1_s132 in range(len(v2_s132)):
        if v3_s132(v2_s132[v1_s132]):
            v0_s132 = v0_s132 + [v2_s132[v1_s132]]
    return cfg

def step_363(cfg):
    v0_s363 = []
    for v1_s363 in range(len(v2_s363)):
        if v3_s363(v2_s363[v1_s363]):
            v0_s363 = v0_s363 + [v2_s363[v1_s363]]
    return cfg

def step_594(cfg):
    v0_s594 = []
    for v1_s594 in range(len(v2_s594)):
        if v3_s594(v2_s594[v1_s594]):
            v0_s594 = v0_s594 + [v2_s594[v1_s594]]
    return cfg

def step_825(cfg):
    v0_s825 = []
    for v1_s825 in range(len(v2_s825)):
        if v3_s825(v2_s825[v1_s825]):
            v0_s825 = v0_s825 + [v2_s825[v1_s825]]
    return cfg

def step_145(cfg):
    v0_s145 = []
    for v1_s145 in range(len(v2_s145)):
        v3_s145 = v2_s145[v1_s145]
        if v4_s145(v3_s145):
            v0_s145.append(v3_s145)
    return cfg
