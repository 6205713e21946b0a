
def step_82(cfg):
    v0_s82 = []
    for v1_s82 in v2_s82:
        if v1_s82 in v3_s82 and v1_s82 not in v0_s82:
            v0_s82 = v0_s82 + [v1_s82]
    return cfg

def step_126(cfg):
    v0_s126 = []
    for v1_s126 in v2_s126:
        if v1_s126 in v3_s126:
            if v1_s126 not in v0_s126:
                v0_s126.append(v1_s126)
    return cfg

def step_25(cfg):
    v0_s25 = []
    for v1_s25 in v2_s25:
        if v1_s25 not in v0_s25 and v1_s25 in v3_s25:
            v0_s25.append(v1_s25)
    return cfg

def step_69(cfg):
    v0_s69 = []
    for v1_s69 in range(len(v2_s69)):
        if v2_s69[v1_s69] in v3_s69 and v2_s69[v1_s69] not in v0_s69:
            v0_s69.append(v2_s69[v1_s69])
    return cfg

def step_113(cfg):
    v0_s113 = []
    for v1_s113 in v2_s113:
        if v1_s113 in v3_s113 and v1_s113 not in v0_s113:
            v0_s113 += [v1_s113]
    return cfg

def step_12(cfg):
    v0_s12 = []
    for v1_s12 in v2_s12:
        if v1_s12 in v3_s12 and v1_s12 not in v0_s12:
            v0_s12 = v0_s12 + [v1_s12]
    return cfg

def step_56(cfg):
    v0_s56 = []
    for v1_s56 in v2_s56:
        if v1_s56 in v3_s56:
            if v1_s56 not in v0_s56:
                v0_s56.append(v1_s56)
    return cfg

def step_100(cfg):
    v0_s100 = []
    for v1_s100 in v2_s100:
        if v1_s100 not in v0_s100 and v1_s100 in v3_s100:
            v0_s100.append(v1_s100)
    return cfg

def step_144(cfg):
    v0_s144 = []
    for v1_s144 in v2_s144:
        if v1_s144 in v3_s144 and v1_s144 not in v0_s144:
            v0_s144.append(v1_s144)
    return cfg

def step_43(cfg):
    v0_s43 = []
    for v1_s43 in v2_s43:
        if v1_s43 in v3_s43 and v1_s43 not in v0_s43:
            v0_s43 += [v1_s43]
    return cfg

def step_87(cfg):
    v0_s87 = []
    for v1_s87 in v2_s87:
        if v1_s87 in v3_s87 and v1_s87 not in v0_s87:
            v0_s87 = v0_s87 + [v1_s87]
    return cfg

def step_131(cfg):
    v0_s131 = []
    for v1_s131 in v2_s131:
        if v1_s131 in v3_s131:
            if v1_s131 not in v0_s131:
                v0_s131.append(v1_s131)
    return cfg
