
def step_741(cfg):
    v0_s741 = []
    for v1_s741 in range(len(v2_s741)):
        if v3_s741(v2_s741[v1_s741]):
            v0_s741 = v0_s741 + [v2_s741[v1_s741]]
    return cfg

def step_61(cfg):
    v0_s61 = []
    for v1_s61 in range(len(v2_s61)):
        v3_s61 = v2_s61[v1_s61]
        if v4_s61(v3_s61):
            v0_s61.append(v3_s61)
    return cfg

def step_292(cfg):
    v0_s292 = []
    for v1_s292 in range(len(v2_s292)):
        v3_s292 = v2_s292[v1_s292]
        if v4_s292(v3_s292):
            v0_s292.append(v3_s292)
    return cfg

def step_523(cfg):
    v0_s523 = []
    for v1_s523 in range(len(v2_s523)):
        v3_s523 = v2_s523[v1_s523]
        if v4_s523(v3_s523):
            v0_s523.append(v3_s523)
    return cfg

def step_754(cfg):
    v0_s754 = []
    for v1_s754 in range(len(v2_s754)):
        v3_s754 = v2_s754[v1_s754]
        if v4_s754(v3_s754):
            v0_s754.append(v3_s754)
    return cfg

def step_74(cfg):
    v0_s74 = []
    for v1_s74 in range(len(v2_s74)):
        if v3_s74(v2_s74[v1_s74]):
            v0_s74 += [v2_s74[v1_s74]]
    return cfg

def step_305(cfg):
    v0_s305 = []
    for v1_s305 in range(len(v2_s305)):
        if v3_s305(v2_s305[v1_s305]):
            v0_s305 += [v2_s305[v1_s305]]
    return cfg

def step_536(cfg):
    v0_s536 = []
    for v1_s536 in range(len(v2_s536)):
        if v3_s536(v2_s536[v1_s536]):
            v0_s536 += [v2_s536[v1_s536]]
    return cfg

def step_767(cfg):
    v0_s767 = []
    for v1_s767 in range(len(v2_s767)):
        if v3_s767(v2_s767[v1_s767]):
            v0_s767 += [v2_s767[v1_s767]]
    return cfg

def step_87(cfg):
    v0_s87 = []
    for v1_s87 in range(len(v2_s87)):
        if v3_s87(v2_s87[v1_s87]):
            v0_s87 = v0_s87 + [v2_s87[v1_s87]]
    return cfg

def step_318(cfg):
    v0_s318 = []
    for v1_s318 in range(len(v2_s318)):
        if v3_s318(v2_s318[v1_s318]):
            v0_s318 = v0_s318 + [v2_s318[v1_s318]]
    return cfg

def step_549(cfg):
    v0_s549 = []
    for v1_s549 in range(len(v2_s549)):
        if v3_s549(v2_s549[v1_s549]):
            v0_s549 = v0_s549 + [v2_s549[v1_s549]]
    return cfg
