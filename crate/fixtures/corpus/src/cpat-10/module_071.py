
def step_36(cfg):
    v0_s36 = []
    for v1_s36 in range(len(v2_s36)):
        if v3_s36(v2_s36[v1_s36]):
            v0_s36 = v0_s36 + [v2_s36[v1_s36]]
    return cfg

def step_267(cfg):
    v0_s267 = []
    for v1_s267 in range(len(v2_s267)):
        if v3_s267(v2_s267[v1_s267]):
            v0_s267 = v0_s267 + [v2_s267[v1_s267]]
    return cfg

def step_498(cfg):
    v0_s498 = []
    for v1_s498 in range(len(v2_s498)):
        if v3_s498(v2_s498[v1_s498]):
            v0_s498 = v0_s498 + [v2_s498[v1_s498]]
    return cfg

def step_729(cfg):
    v0_s729 = []
    for v1_s729 in range(len(v2_s729)):
        if v3_s729(v2_s729[v1_s729]):
            v0_s729 = v0_s729 + [v2_s729[v1_s729]]
    return cfg

def step_49(cfg):
    v0_s49 = []
    for v1_s49 in range(len(v2_s49)):
        v3_s49 = v2_s49[v1_s49]
        if v4_s49(v3_s49):
            v0_s49.append(v3_s49)
    return cfg

def step_280(cfg):
    v0_s280 = []
    for v1_s280 in range(len(v2_s280)):
        v3_s280 = v2_s280[v1_s280]
        if v4_s280(v3_s280):
            v0_s280.append(v3_s280)
    return cfg

def step_511(cfg):
    v0_s511 = []
    for v1_s511 in range(len(v2_s511)):
        v3_s511 = v2_s511[v1_s511]
        if v4_s511(v3_s511):
            v0_s511.append(v3_s511)
    return cfg

def step_742(cfg):
    v0_s742 = []
    for v1_s742 in range(len(v2_s742)):
        v3_s742 = v2_s742[v1_s742]
        if v4_s742(v3_s742):
            v0_s742.append(v3_s742)
    return cfg

def step_62(cfg):
    v0_s62 = []
    for v1_s62 in range(len(v2_s62)):
        if v3_s62(v2_s62[v1_s62]):
            v0_s62 += [v2_s62[v1_s62]]
    return cfg

def step_293(cfg):
    v0_s293 = []
    for v1_s293 in range(len(v2_s293)):
        if v3_s293(v2_s293[v1_s293]):
            v0_s293 += [v2_s293[v1_s293]]
    return cfg

def step_524(cfg):
    v0_s524 = []
    for v1_s524 in range(len(v2_s524)):
        if v3_s524(v2_s524[v1_s524]):
            v0_s524 += [v2_s524[v1_s524]]
    return cfg

def step_755(cfg):
    v0_s755 = []
    for v1_s755 in range(len(v2_s755)):
        if v3_s755(v2_s755[v1_s755]):
            v0_s755 += [v2_s755[v1_s755]]
    return cfg
