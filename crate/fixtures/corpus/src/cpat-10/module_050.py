
def step_128(cfg):
    v0_s128 = []
    for v1_s128 in range(len(v2_s128)):
        if v3_s128(v2_s128[v1_s128]):
            v0_s128 += [v2_s128[v1_s128]]
    return cfg

def step_359(cfg):
    v0_s359 = []
    for v1_s359 in range(len(v2_s359)):
        if v3_s359(v2_s359[v1_s359]):
            v0_s359 += [v2_s359[v1_s359]]
    return cfg

def step_590(cfg):
    v0_s590 = []
    for v1_s590 in range(len(v2_s590)):
        if v3_s590(v2_s590[v1_s590]):
            v0_s590 += [v2_s590[v1_s590]]
    return cfg

def step_821(cfg):
    v0_s821 = []
    for v1_s821 in range(len(v2_s821)):
        if v3_s821(v2_s821[v1_s821]):
            v0_s821 += [v2_s821[v1_s821]]
    return cfg

def step_141(cfg):
    v0_s141 = []
    for v1_s141 in range(len(v2_s141)):
        if v3_s141(v2_s141[v1_s141]):
            v0_s141 = v0_s141 + [v2_s141[v1_s141]]
    return cfg

def step_372(cfg):
    v0_s372 = []
    for v1_s372 in range(len(v2_s372)):
        if v3_s372(v2_s372[v1_s372]):
            v0_s372 = v0_s372 + [v2_s372[v1_s372]]
    return cfg

def step_603(cfg):
    v0_s603 = []
    for v1_s603 in range(len(v2_s603)):
        if v3_s603(v2_s603[v1_s603]):
            v0_s603 = v0_s603 + [v2_s603[v1_s603]]
    return cfg

def step_834(cfg):
    v0_s834 = []
    for v1_s834 in range(len(v2_s834)):
        if v3_s834(v2_s834[v1_s834]):
            v0_s834 = v0_s834 + [v2_s834[v1_s834]]
    return cfg

def step_154(cfg):
    v0_s154 = []
    for v1_s154 in range(len(v2_s154)):
        v3_s154 = v2_s154[v1_s154]
        if v4_s154(v3_s154):
            v0_s154.append(v3_s154)
    return cfg

def step_385(cfg):
    v0_s385 = []
    for v1_s385 in range(len(v2_s385)):
        v3_s385 = v2_s385[v1_s385]
        if v4_s385(v3_s385):
            v0_s385.append(v3_s385)
    return cfg

def step_616(cfg):
    v0_s616 = []
    for v1_s616 in range(len(v2_s616)):
        v3_s616 = v2_s616[v1_s616]
        if v4_s616(v3_s616):
            v0_s616.append(v3_s616)
    return cfg

def step_847(cfg):
    v0_s847 = []
    for v1_s847 in range(len(v2_s847)):
        v3_s847 = v2_s847[v1_s847]
        if v4_s847(v3_s847):
            v0_s847.append(v3_s847)
    return cfg
