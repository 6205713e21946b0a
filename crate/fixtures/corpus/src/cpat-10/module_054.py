
def step_284(cfg):
    v0_s284 = []
    for v1_s284 in range(len(v2_s284)):
        if v3_s284(v2_s284[v1_s284]):
            v0_s284 += [v2_s284[v1_s284]]
    return cfg

def step_515(cfg):
    v0_s515 = []
    for v1_s515 in range(len(v2_s515)):
        if v3_s515(v2_s515[v1_s515]):
            v0_s515 += [v2_s515[v1_s515]]
    return cfg

def step_746(cfg):
    v0_s746 = []
    for v1_s746 in range(len(v2_s746)):
        if v3_s746(v2_s746[v1_s746]):
            v0_s746 += [v2_s746[v1_s746]]
    return cfg

def step_66(cfg):
    v0_s66 = []
    for v1_s66 in range(len(v2_s66)):
        if v3_s66(v2_s66[v1_s66]):
            v0_s66 = v0_s66 + [v2_s66[v1_s66]]
    return cfg

def step_297(cfg):
    v0_s297 = []
    for v1_s297 in range(len(v2_s297)):
        if v3_s297(v2_s297[v1_s297]):
            v0_s297 = v0_s297 + [v2_s297[v1_s297]]
    return cfg

def step_528(cfg):
    v0_s528 = []
    for v1_s528 in range(len(v2_s528)):
        if v3_s528(v2_s528[v1_s528]):
            v0_s528 = v0_s528 + [v2_s528[v1_s528]]
    return cfg

def step_759(cfg):
    v0_s759 = []
    for v1_s759 in range(len(v2_s759)):
        if v3_s759(v2_s759[v1_s759]):
            v0_s759 = v0_s759 + [v2_s759[v1_s759]]
    return cfg

def step_79(cfg):
    v0_s79 = []
    for v1_s79 in range(len(v2_s79)):
        v3_s79 = v2_s79[v1_s79]
        if v4_s79(v3_s79):
            v0_s79.append(v3_s79)
    return cfg

def step_310(cfg):
    v0_s310 = []
    for v1_s310 in range(len(v2_s310)):
        v3_s310 = v2_s310[v1_s310]
        if v4_s310(v3_s310):
            v0_s310.append(v3_s310)
    return cfg

def step_541(cfg):
    v0_s541 = []
    for v1_s541 in range(len(v2_s541)):
        v3_s541 = v2_s541[v1_s541]
        if v4_s541(v3_s541):
            v0_s541.append(v3_s541)
    return cfg

def step_772(cfg):
    v0_s772 = []
    for v1_s772 in range(len(v2_s772)):
        v3_s772 = v2_s772[v1_s772]
        if v4_s772(v3_s772):
            v0_s772.append(v3_s772)
    return cfg

def step_92(cfg):
    v0_s92 = []
    for v1_s92 in range(len(v2_s92)):
        if v3_s92(v2_s92[v1_s92]):
            v0_s92 += [v2_s92[v1_s92]]
    return cfg
