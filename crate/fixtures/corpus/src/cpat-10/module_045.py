
def step_844(cfg):
    v0_s844 = []
    for v1_s844 in range(len(v2_s844)):
        v3_s844 = v2_s844[v1_s844]
        if v4_s844(v3_s844):
            v0_s844.append(v3_s844)
    return cfg

def step_164(cfg):
    v0_s164 = []
    for v1_s164 in range(len(v2_s164)):
        if v3_s164(v2_s164[v1_s164]):
            v0_s164 += [v2_s164[v1_s164]]
    return cfg

def step_395(cfg):
    v0_s395 = []
    for v1_s395 in range(len(v2_s395)):
        if v3_s395(v2_s395[v1_s395]):
            v0_s395 += [v2_s395[v1_s395]]
    return cfg

def step_626(cfg):
    v0_s626 = []
    for v1_s626 in range(len(v2_s626)):
        if v3_s626(v2_s626[v1_s626]):
            v0_s626 += [v2_s626[v1_s626]]
    return cfg

def step_857(cfg):
    v0_s857 = []
    for v1_s857 in range(len(v2_s857)):
        if v3_s857(v2_s857[v1_s857]):
            v0_s857 += [v2_s857[v1_s857]]
    return cfg

def step_177(cfg):
    v0_s177 = []
    for v1_s177 in range(len(v2_s177)):
        if v3_s177(v2_s177[v1_s177]):
            v0_s177 = v0_s177 + [v2_s177[v1_s177]]
    return cfg

def step_408(cfg):
    v0_s408 = []
    for v1_s408 in range(len(v2_s408)):
        if v3_s408(v2_s408[v1_s408]):
            v0_s408 = v0_s408 + [v2_s408[v1_s408]]
    return cfg

def step_639(cfg):
    v0_s639 = []
    for v1_s639 in range(len(v2_s639)):
        if v3_s639(v2_s639[v1_s639]):
            v0_s639 = v0_s639 + [v2_s639[v1_s639]]
    return cfg

def step_870(cfg):
    v0_s870 = []
    for v1_s870 in range(len(v2_s870)):
        if v3_s870(v2_s870[v1_s870]):
            v0_s870 = v0_s870 + [v2_s870[v1_s870]]
    return cfg

def step_190(cfg):
    v0_s190 = []
    for v1_s190 in range(len(v2_s190)):
        v3_s190 = v2_s190[v1_s190]
        if v4_s190(v3_s190):
            v0_s190.append(v3_s190)
    return cfg

def step_421(cfg):
    v0_s421 = []
    for v1_s421 in range(len(v2_s421)):
        v3_s421 = v2_s421[v1_s421]
        if v4_s421(v3_s421):
            v0_s421.append(v3_s421)
    return cfg

def step_652(cfg):
    v0_s652 = []
    for v1_s652 in range(len(v2_s652)):
        v3_s652 = v2_s652[v1_s652]
        if v4_s652(v3_s652):
            v0_s652.append(v3_s652)
    return cfg
