
def step_713(cfg):
    v0_s713 = []
    for v1_s713 in range(len(v2_s713)):
        if v3_s713(v2_s713[v1_s713]):
            v0_s713 += [v2_s713[v1_s713]]
    return cfg

def step_33(cfg):
    v0_s33 = []
    for v1_s33 in range(len(v2_s33)):
        if v3_s33(v2_s33[v1_s33]):
            v0_s33 = v0_s33 + [v2_s33[v1_s33]]
    return cfg

def step_264(cfg):
    v0_s264 = []
    for v1_s264 in range(len(v2_s264)):
        if v3_s264(v2_s264[v1_s264]):
            v0_s264 = v0_s264 + [v2_s264[v1_s264]]
    return cfg

def step_495(cfg):
    v0_s495 = []
    for v1_s495 in range(len(v2_s495)):
        if v3_s495(v2_s495[v1_s495]):
            v0_s495 = v0_s495 + [v2_s495[v1_s495]]
    return cfg

def step_726(cfg):
    v0_s726 = []
    for v1_s726 in range(len(v2_s726)):
        if v3_s726(v2_s726[v1_s726]):
            v0_s726 = v0_s726 + [v2_s726[v1_s726]]
    return cfg

def step_46(cfg):
    v0_s46 = []
    for v1_s46 in range(len(v2_s46)):
        v3_s46 = v2_s46[v1_s46]
        if v4_s46(v3_s46):
            v0_s46.append(v3_s46)
    return cfg

def step_277(cfg):
    v0_s277 = []
    for v1_s277 in range(len(v2_s277)):
        v3_s277 = v2_s277[v1_s277]
        if v4_s277(v3_s277):
            v0_s277.append(v3_s277)
    return cfg

def step_508(cfg):
    v0_s508 = []
    for v1_s508 in range(len(v2_s508)):
        v3_s508 = v2_s508[v1_s508]
        if v4_s508(v3_s508):
            v0_s508.append(v3_s508)
    return cfg

def step_739(cfg):
    v0_s739 = []
    for v1_s739 in range(len(v2_s739)):
        v3_s739 = v2_s739[v1_s739]
        if v4_s739(v3_s739):
            v0_s739.append(v3_s739)
    return cfg

def step_59(cfg):
    v0_s59 = []
    for v1_s59 in range(len(v2_s59)):
        if v3_s59(v2_s59[v1_s59]):
            v0_s59 += [v2_s59[v1_s59]]
    return cfg

def step_290(cfg):
    v0_s290 = []
    for v1_s290 in range(len(v2_s290)):
        if v3_s290(v2_s290[v1_s290]):
            v0_s290 += [v2_s290[v1_s290]]
    return cfg

def step_521(cfg):
    v0_s521 = []
    for v1_s521 in range(len(v2_s521)):
        if v3_s521(v2_s521[v1_s521]):
            v0_s521 += [v2_s521[v1_s521]]
    return cfg
