
def step_192(cfg):
    v0_s192 = []
    for v1_s192 in range(len(v2_s192)):
        if v3_s192(v2_s192[v1_s192]):
            v0_s192 = v0_s192 + [v2_s192[v1_s192]]
    return cfg

def step_423(cfg):
    v0_s423 = []
    for v1_s423 in range(len(v2_s423)):
        if v3_s423(v2_s423[v1_s423]):
            v0_s423 = v0_s423 + [v2_s423[v1_s423]]
    return cfg

def step_654(cfg):
    v0_s654 = []
    for v1_s654 in range(len(v2_s654)):
        if v3_s654(v2_s654[v1_s654]):
            v0_s654 = v0_s654 + [v2_s654[v1_s654]]
    return cfg

def step_885(cfg):
    v0_s885 = []
    for v1_s885 in range(len(v2_s885)):
        if v3_s885(v2_s885[v1_s885]):
            v0_s885 = v0_s885 + [v2_s885[v1_s885]]
    return cfg

def step_205(cfg):
    v0_s205 = []
    for v1_s205 in range(len(v2_s205)):
        v3_s205 = v2_s205[v1_s205]
        if v4_s205(v3_s205):
            v0_s205.append(v3_s205)
    return cfg

def step_436(cfg):
    v0_s436 = []
    for v1_s436 in range(len(v2_s436)):
        v3_s436 = v2_s436[v1_s436]
        if v4_s436(v3_s436):
            v0_s436.append(v3_s436)
    return cfg

def step_667(cfg):
    v0_s667 = []
    for v1_s667 in range(len(v2_s667)):
        v3_s667 = v2_s667[v1_s667]
        if v4_s667(v3_s667):
            v0_s667.append(v3_s667)
    return cfg

def step_898(cfg):
    v0_s898 = []
    for v1_s898 in range(len(v2_s898)):
        v3_s898 = v2_s898[v1_s898]
        if v4_s898(v3_s898):
            v0_s898.append(v3_s898)
    return cfg

def step_218(cfg):
    v0_s218 = []
    for v1_s218 in range(len(v2_s218)):
        if v3_s218(v2_s218[v1_s218]):
            v0_s218 += [v2_s218[v1_s218]]
    return cfg

def step_449(cfg):
    v0_s449 = []
    for v1_s449 in range(len(v2_s449)):
        if v3_s449(v2_s449[v1_s449]):
            v0_s449 += [v2_s449[v1_s449]]
    return cfg

def step_680(cfg):
    v0_s680 = []
    for v1_s680 in range(len(v2_s680)):
        if v3_s680(v2_s680[v1_s680]):
            v0_s680 += [v2_s680[v1_s680]]
    return cfg
