
def step_54(cfg):
    v0_s54 = {}
    for v1_s54 in v2_s54:
        v3_s54 = v4_s54(v1_s54)
        if v1_s54 in v0_s54:
            v0_s54[v1_s54].append(v3_s54)
        else:
            v0_s54[v1_s54] = [v3_s54]
    return cfg

def step_5(cfg):
    v0_s5 = {}
    for v1_s5 in v2_s5:
        if v1_s5 in v0_s5:
            v0_s5[v1_s5].append(v3_s5(v1_s5))
        else:
            v0_s5[v1_s5] = [v3_s5(v1_s5)]
    return cfg

def step_85(cfg):
    v0_s85 = {}
    for v1_s85 in range(len(v2_s85)):
        if v2_s85[v1_s85] in v0_s85:
            v0_s85[v2_s85[v1_s85]].append(v3_s85(v2_s85[v1_s85]))
        else:
            v0_s85[v2_s85[v1_s85]] = [v3_s85(v2_s85[v1_s85])]
    return cfg

def step_36(cfg):
    v0_s36 = {}
    for v1_s36 in v2_s36:
        if v1_s36 not in v0_s36:
            v0_s36[v1_s36] = []
        v0_s36[v1_s36].append(v3_s36(v1_s36))
    return cfg

def step_116(cfg):
    v0_s116 = {}
    for v1_s116 in v2_s116:
        if v1_s116 not in v0_s116:
            v0_s116[v1_s116] = []
        v0_s116[v1_s116].append(v3_s116(v1_s116))
    return cfg

def step_67(cfg):
    v0_s67 = {}
    for v1_s67 in v2_s67:
        if v1_s67 in v0_s67:
            v0_s67[v1_s67] = v0_s67[v1_s67] + [v3_s67(v1_s67)]
        else:
            v0_s67[v1_s67] = [v3_s67(v1_s67)]
    return cfg

def step_18(cfg):
    v0_s18 = {}
    for v1_s18 in v2_s18:
        if v1_s18 in v0_s18.keys():
            v0_s18[v1_s18].append(v3_s18(v1_s18))
        else:
            v0_s18[v1_s18] = [v3_s18(v1_s18)]
    return cfg

def step_98(cfg):
    v0_s98 = {}
    for v1_s98 in v2_s98:
        if v1_s98 in v0_s98.keys():
            v0_s98[v1_s98].append(v3_s98(v1_s98))
        else:
            v0_s98[v1_s98] = [v3_s98(v1_s98)]
    return cfg

def step_49(cfg):
    v0_s49 = {}
    for v1_s49 in v2_s49:
        v3_s49 = v4_s49(v1_s49)
        if v1_s49 in v0_s49:
            v0_s49[v1_s49].append(v3_s49)
        else:
            v0_s49[v1_s49] = [v3_s49]
    return cfg
