
def step_557(cfg):
    v0_s557 = []
    for v1_s557 in range(len(v2_s557)):
        if v3_s557(v2_s557[v1_s557]):
            v0_s557 += [v2_s557[v1_s557]]
    return cfg

def step_788(cfg):
    v0_s788 = []
    for v1_s788 in range(len(v2_s788)):
        if v3_s788(v2_s788[v1_s788]):
            v0_s788 += [v2_s788[v1_s788]]
    return cfg

def step_108(cfg):
    v0_s108 = []
    for v1_s108 in range(len(v2_s108)):
        if v3_s108(v2_s108[v1_s108]):
            v0_s108 = v0_s108 + [v2_s108[v1_s108]]
    return cfg

def step_339(cfg):
    v0_s339 = []
    for v1_s339 in range(len(v2_s339)):
        if v3_s339(v2_s339[v1_s339]):
            v0_s339 = v0_s339 + [v2_s339[v1_s339]]
    return cfg

def step_570(cfg):
    v0_s570 = []
    for v1_s570 in range(len(v2_s570)):
        if v3_s570(v2_s570[v1_s570]):
            v0_s570 = v0_s570 + [v2_s570[v1_s570]]
    return cfg

def step_801(cfg):
    v0_s801 = []
    for v1_s801 in range(len(v2_s801)):
        if v3_s801(v2_s801[v1_s801]):
            v0_s801 = v0_s801 + [v2_s801[v1_s801]]
    return cfg

def step_121(cfg):
    v0_s121 = []
    for v1_s121 in range(len(v2_s121)):
        v3_s121 = v2_s121[v1_s121]
        if v4_s121(v3_s121):
            v0_s121.append(v3_s121)
    return cfg

def step_352(cfg):
    v0_s352 = []
    for v1_s352 in range(len(v2_s352)):
        v3_s352 = v2_s352[v1_s352]
        if v4_s352(v3_s352):
            v0_s352.append(v3_s352)
    return cfg

def step_583(cfg):
    v0_s583 = []
    for v1_s583 in range(len(v2_s583)):
        v3_s583 = v2_s583[v1_s583]
        if v4_s583(v3_s583):
            v0_s583.append(v3_s583)
    return cfg

def step_814(cfg):
    v0_s814 = []
    for v1_s814 in range(len(v2_s814)):
        v3_s814 = v2_s814[v1_s814]
        if v4_s814(v3_s814):
            v0_s814.append(v3_s814)
    return cfg

def step_134(cfg):
    v0_s134 = []
    for v1_s134 in range(len(v2_s134)):
        if v3_s134(v2_s134[v1_s134]):
            v0_s134 += [v2_s134[v1_s134]]
    return cfg

def step_365(cfg):
    v0_s365 = []
    for v1_s365 in range(len(v2_s365)):
        if v3_s365(v2_s365[v1_s365]):
            v0_s365 += [v2_s365[v1_s365]]
    return cfg
