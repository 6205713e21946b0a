
def step_126(cfg):
    v0_s126 = {}
    for v1_s126 in v2_s126:
        if v1_s126 in v0_s126:
            v0_s126[v1_s126].append(v3_s126(v1_s126))
        else:
            v0_s126[v1_s126] = [v3_s126(v1_s126)]
    return cfg

def step_77(cfg):
    v0_s77 = {}
    for v1_s77 in v2_s77:
        if v1_s77 in v0_s77:
            v0_s77[v1_s77] = v0_s77[v1_s77] + [v3_s77(v1_s77)]
        else:
            v0_s77[v1_s77] = [v3_s77(v1_s77)]
    return cfg

def step_28(cfg):
    v0_s28 = {}
    for v1_s28 in v2_s28:
        if v1_s28 in v0_s28.keys():
            v0_s28[v1_s28].append(v3_s28(v1_s28))
        else:
            v0_s28[v1_s28] = [v3_s28(v1_s28)]
    return cfg

def step_108(cfg):
    v0_s108 = {}
    for v1_s108 in v2_s108:
        if v1_s108 in v0_s108.keys():
            v0_s108[v1_s108].append(v3_s108(v1_s108))
        else:
            v0_s108[v1_s108] = [v3_s108(v1_s108)]
    return cfg

def step_59(cfg):
    v0_s59 = {}
    for v1_s59 in v2_s59:
        v3_s59 = v4_s59(v1_s59)
        if v1_s59 in v0_s59:
            v0_s59[v1_s59].append(v3_s59)
        else:
            v0_s59[v1_s59] = [v3_s59]
    return cfg

def step_10(cfg):
    v0_s10 = {}
    for v1_s10 in range(len(v2_s10)):
        if v2_s10[v1_s10] in v0_s10:
            v0_s10[v2_s10[v1_s10]].append(v3_s10(v2_s10[v1_s10]))
        else:
            v0_s10[v2_s10[v1_s10]] = [v3_s10(v2_s10[v1_s10])]
    return cfg

def step_90(cfg):
    v0_s90 = {}
    for v1_s90 in range(len(v2_s90)):
        if v2_s90[v1_s90] in v0_s90:
            v0_s90[v2_s90[v1_s90]].append(v3_s90(v2_s90[v1_s90]))
        else:
            v0_s90[v2_s90[v1_s90]] = [v3_s90(v2_s90[v1_s90])]
    return cfg

def step_41(cfg):
    v0_s41 = {}
    for v1_s41 in v2_s41:
        if v1_s41 not in v0_s41:
            v0_s41[v1_s41] = []
        v0_s41[v1_s41].append(v3_s41(v1_s41))
    return cfg

def step_121(cfg):
    v0_s121 = {}
    for v1_s121 in v2_s121:
        if v1_s121 not in v0_s121:
            v0_s121[v1_s121] = []
        v0_s121[v1_s121].append(v3_s121(v1_s121))
    return cfg

def step_72(cfg):
    v0_s72 = {}
    for v1_s72 in v2_s72:
        if v1_s72 in v0_s72:
            v0_s72[v1_s72] = v0_s72[v1_s72] + [v3_s72(v1_s72)]
        else:
            v0_s72[v1_s72] = [v3_s72(v1_s72)]
    return cfg

def step_23(cfg):
    v0_s23 = {}
    for v1_s23 in v2_s23:
        if v1_s23 in v0_s23.keys():
            v0_s23[v1_s23].append(v3_s23(v1_s23))
        else:
            v0_s23[v1_s23] = [v3_s23(v1_s23)]
    return cfg

def step_103(cfg):
    v0_s103 = {}
    for v1_s103 in v2_s103:
        if v1_s103 in v0_s103.keys():
            v0_s103[v1_s103].append(v3_s103(v1_s103))
        else:
            v0_s103[v1_s103] = [v3_s103(v1_s103)]
    return cfg
