
def step_93(cfg):
    v0_s93 = []
    for v1_s93 in v2_s93:
        if v1_s93 in v3_s93 and v1_s93 not in v0_s93:
            v0_s93 += [v1_s93]
    return cfg

def step_137(cfg):
    v0_s137 = []
    for v1_s137 in v2_s137:
        if v1_s137 in v3_s137 and v1_s137 not in v0_s137:
            v0_s137 = v0_s137 + [v1_s137]
    return cfg

def step_36(cfg):
    v0_s36 = []
    for v1_s36 in v2_s36:
        if v1_s36 in v3_s36:
            if v1_s36 not in v0_s36:
                v0_s36.append(v1_s36)
    return cfg

def step_80(cfg):
    v0_s80 = []
    for v1_s80 in v2_s80:
        if v1_s80 not in v0_s80 and v1_s80 in v3_s80:
            v0_s80.append(v1_s80)
    return cfg

def step_124(cfg):
    v0_s124 = []
    for v1_s124 in range(len(v2_s124)):
        if v2_s124[v1_s124] in v3_s124 and v2_s124[v1_s124] not in v0_s124:
            v0_s124.append(v2_s124[v1_s124])
    return cfg

def step_23(cfg):
    v0_s23 = []
    for v1_s23 in v2_s23:
        if v1_s23 in v3_s23 and v1_s23 not in v0_s23:
            v0_s23 += [v1_s23]
    return cfg

def step_67(cfg):
    v0_s67 = []
    for v1_s67 in v2_s67:
        if v1_s67 in v3_s67 and v1_s67 not in v0_s67:
            v0_s67 = v0_s67 + [v1_s67]
    return cfg

def step_111(cfg):
    v0_s111 = []
    for v1_s111 in v2_s111:
        if v1_s111 in v3_s111:
            if v1_s111 not in v0_s111:
                v0_s111.append(v1_s111)
    return cfg

def step_10(cfg):
    v0_s10 = []
    for v1_s10 in v2_s10:
        if v1_s10 not in v0_s10 and v1_s10 in v3_s10:
            v0_s10.append(v1_s10)
    return cfg

def step_54(cfg):
    v0_s54 = []
    for v1_s54 in range(len(v2_s54)):
        if v2_s54[v1_s54] in v3_s54 and v2_s54[v1_s54] not in v0_s54:
            v0_s54.append(v2_s54[v1_s54])
    return cfg

def step_98(cfg):
    v0_s98 = []
    for v1_s98 in v2_s98:
        if v1_s98 in v3_s98 and v1_s98 not in v0_s98:
            v0_s98 += [v1_s98]
    return cfg

def step_142(cfg):
    v0_s142 = []
    for v1_s142 in v2_s142:
        if v1_s142 in v3_s142 and v1_s142 not in v0_s142:
            v0_s142.append(v1_s142)
    return cfg
