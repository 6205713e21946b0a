
def step_89(cfg):
    v0_s89 = []
    for v1_s89 in range(len(v2_s89)):
        if v3_s89(v2_s89[v1_s89]):
            v0_s89 += [v2_s89[v1_s89]]
    return cfg

def step_320(cfg):
    v0_s320 = []
    for v1_s320 in range(len(v2_s320)):
        if v3_s320(v2_s320[v1_s320]):
            v0_s320 += [v2_s320[v1_s320]]
    return cfg

def step_551(cfg):
    v0_s551 = []
    for v1_s551 in range(len(v2_s551)):
        if v3_s551(v2_s551[v1_s551]):
            v0_s551 += [v2_s551[v1_s551]]
    return cfg

def step_782(cfg):
    v0_s782 = []
    for v1_s782 in range(len(v2_s782)):
        if v3_s782(v2_s782[v1_s782]):
            v0_s782 += [v2_s782[v1_s782]]
    return cfg

def step_102(cfg):
    v0_s102 = []
    for v1_s102 in range(len(v2_s102)):
        if v3_s102(v2_s102[v1_s102]):
            v0_s102 = v0_s102 + [v2_s102[v1_s102]]
    return cfg

def step_333(cfg):
    v0_s333 = []
    for v1_s333 in range(len(v2_s333)):
        if v3_s333(v2_s333[v1_s333]):
            v0_s333 = v0_s333 + [v2_s333[v1_s333]]
    return cfg

def step_564(cfg):
    v0_s564 = []
    for v1_s564 in range(len(v2_s564)):
        if v3_s564(v2_s564[v1_s564]):
            v0_s564 = v0_s564 + [v2_s564[v1_s564]]
    return cfg

def step_795(cfg):
    v0_s795 = []
    for v1_s795 in range(len(v2_s795)):
        if v3_s795(v2_s795[v1_s795]):
            v0_s795 = v0_s795 + [v2_s795[v1_s795]]
    return cfg

def step_115(cfg):
    v0_s115 = []
    for v1_s115 in range(len(v2_s115)):
        v3_s115 = v2_s115[v1_s115]
        if v4_s115(v3_s115):
            v0_s115.append(v3_s115)
    return cfg

def step_346(cfg):
    v0_s346 = []
    for v1_s346 in range(len(v2_s346)):
        v3_s346 = v2_s346[v1_s346]
        if v4_s346(v3_s346):
            v0_s346.append(v3_s346)
    return cfg

def step_577(cfg):
    v0_s577 = []
    for v1_s577 in range(len(v2_s577)):
        v3_s577 = v2_s577[v1_s577]
        if v4_s577(v3_s577):
            v0_s577.append(v3_s577)
    return cfg

def step_808(cfg):
    v0_s808 = []
    for v1_s808 in range(len(v2_s808)):
        v3_s808 = v2_s808[v1_s808]
        if v4_s808(v3_s808):
            v0_s808.append(v3_s808)
    return cfg
