
def step_674(cfg):
    v0_s674 = []
    for v1_s674 in range(len(v2_s674)):
        if v3_s674(v2_s674[v1_s674]):
            v0_s674 += [v2_s674[v1_s674]]
    return cfg

def step_905(cfg):
    v0_s905 = []
    for v1_s905 in range(len(v2_s905)):
        if v3_s905(v2_s905[v1_s905]):
            v0_s905 += [v2_s905[v1_s905]]
    return cfg

def step_225(cfg):
    v0_s225 = []
    for v1_s225 in range(len(v2_s225)):
        if v3_s225(v2_s225[v1_s225]):
            v0_s225 = v0_s225 + [v2_s225[v1_s225]]
    return cfg

def step_456(cfg):
    v0_s456 = []
    for v1_s456 in range(len(v2_s456)):
        if v3_s456(v2_s456[v1_s456]):
            v0_s456 = v0_s456 + [v2_s456[v1_s456]]
    return cfg

def step_687(cfg):
    v0_s687 = []
    for v1_s687 in range(len(v2_s687)):
        if v3_s687(v2_s687[v1_s687]):
            v0_s687 = v0_s687 + [v2_s687[v1_s687]]
    return cfg

def step_7(cfg):
    v0_s7 = []
    for v1_s7 in range(len(v2_s7)):
        if v3_s7(v2_s7[v1_s7]):
            v0_s7.append(v2_s7[v1_s7])
    return cfg

def step_238(cfg):
    v0_s238 = []
    for v1_s238 in range(len(v2_s238)):
        v3_s238 = v2_s238[v1_s238]
        if v4_s238(v3_s238):
            v0_s238.append(v3_s238)
    return cfg

def step_469(cfg):
    v0_s469 = []
    for v1_s469 in range(len(v2_s469)):
        v3_s469 = v2_s469[v1_s469]
        if v4_s469(v3_s469):
            v0_s469.append(v3_s469)
    return cfg

def step_700(cfg):
    v0_s700 = []
    for v1_s700 in range(len(v2_s700)):
        v3_s700 = v2_s700[v1_s700]
        if v4_s700(v3_s700):
            v0_s700.append(v3_s700)
    return cfg

def step_20(cfg):
    v0_s20 = []
    for v1_s20 in range(len(v2_s20)):
        if v3_s20(v2_s20[v1_s20]):
            v0_s20.append(v2_s20[v1_s20])
    return cfg

def step_251(cfg):
    v0_s251 = []
    for v1_s251 in range(len(v2_s251)):
        if v3_s251(v2_s251[v1_s251]):
            v0_s251 += [v2_s251[v1_s251]]
    return cfg

def step_482(cfg):
    v0_s482 = []
    for v1_s482 in range(len(v2_s482)):
        if v3_s482(v2_s482[v1_s482]):
            v0_s482 += [v2_s482[v1_s482]]
    return cfg
