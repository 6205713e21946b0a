
def step_663(cfg):
    v0_s663 = []
    for v1_s663 in range(len(v2_s663)):
        if v3_s663(v2_s663[v1_s663]):
            v0_s663 = v0_s663 + [v2_s663[v1_s663]]
    return cfg

def step_894(cfg):
    v0_s894 = []
    for v1_s894 in range(len(v2_s894)):
        if v3_s894(v2_s894[v1_s894]):
            v0_s894 = v0_s894 + [v2_s894[v1_s894]]
    return cfg

def step_214(cfg):
    v0_s214 = []
    for v1_s214 in range(len(v2_s214)):
        v3_s214 = v2_s214[v1_s214]
        if v4_s214(v3_s214):
            v0_s214.append(v3_s214)
    return cfg

def step_445(cfg):
    v0_s445 = []
    for v1_s445 in range(len(v2_s445)):
        v3_s445 = v2_s445[v1_s445]
        if v4_s445(v3_s445):
            v0_s445.append(v3_s445)
    return cfg

def step_676(cfg):
    v0_s676 = []
    for v1_s676 in range(len(v2_s676)):
        v3_s676 = v2_s676[v1_s676]
        if v4_s676(v3_s676):
            v0_s676.append(v3_s676)
    return cfg

def step_907(cfg):
    v0_s907 = []
    for v1_s907 in range(len(v2_s907)):
        if v3_s907(v2_s907[v1_s907]):
            v0_s907.append(v2_s907[v1_s907])
    return cfg

def step_227(cfg):
    v0_s227 = []
    for v1_s227 in range(len(v2_s227)):
        if v3_s227(v2_s227[v1_s227]):
            v0_s227 += [v2_s227[v1_s227]]
    return cfg

def step_458(cfg):
    v0_s458 = []
    for v1_s458 in range(len(v2_s458)):
        if v3_s458(v2_s458[v1_s458]):
            v0_s458 += [v2_s458[v1_s458]]
    return cfg

def step_689(cfg):
    v0_s689 = []
    for v1_s689 in range(len(v2_s689)):
        if v3_s689(v2_s689[v1_s689]):
            v0_s689 += [v2_s689[v1_s689]]
    return cfg

def step_9(cfg):
    v0_s9 = []
    for v1_s9 in range(len(v2_s9)):
        if v3_s9(v2_s9[v1_s9]):
            v0_s9.append(v2_s9[v1_s9])
    return cfg

def step_240(cfg):
    v0_s240 = []
    for v1_s240 in range(len(v2_s240)):
        if v3_s240(v2_s240[v1_s240]):
            v0_s240 = v0_s240 + [v2_s240[v1_s240]]
    return cfg

def step_471(cfg):
    v0_s471 = []
    for v1_s471 in range(len(v2_s471)):
        if v3_s471(v2_s471[v1_s471]):
            v0_s471 = v0_s471 + [v2_s471[v1_s471]]
    return cfg
